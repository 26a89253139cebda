//! Command implementations, each returning a typed report that the output
//! layer renders as text, JSON, or CSV.

use crate::parser::KnotSpec;
use nuplus::{
    cobordism_genus_bound, concordance_bounds, default_truncation, gordian_bound, semicontinuity,
    surgery_d_invariants, v_sequence_oracle, v_sequence_single, v_sequence_sum, ConcordanceBounds,
    EnumeratingFunction, ObstructionReport, Ratio, StaircaseDescriptor, VSequence,
};
use serde::Serialize;

/// Runtime options shared by the commands.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub format: OutputFormat,
    /// Oracle truncation override; never lowered below the safe floor.
    pub truncation: Option<u64>,
    /// Surgery coefficient for correction terms in `pair`.
    pub surgery: Option<u64>,
    /// Extends the Γ-difference profile shown in verbose text mode.
    pub max_n: Option<u64>,
    pub verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Serialize)]
pub struct InvariantsReport {
    pub knot: String,
    pub function: EnumeratingFunction,
    pub gaps: Vec<u64>,
    pub staircase: StaircaseDescriptor,
    pub alexander_exponents: Vec<i64>,
    pub v_sequence: VSequence,
    pub nu_plus: u64,
}

pub fn cmd_invariants(spec: &KnotSpec) -> InvariantsReport {
    let g = &spec.resolved;
    let staircase = StaircaseDescriptor::from_gamma(g);
    let v_sequence = v_sequence_single(g);
    InvariantsReport {
        knot: spec.render(),
        function: g.clone(),
        gaps: g.gaps(),
        staircase,
        alexander_exponents: g.to_alexander().exponents().to_vec(),
        nu_plus: v_sequence.nu_plus(),
        v_sequence,
    }
}

#[derive(Serialize)]
pub struct SurgeryReport {
    pub n: u64,
    pub d_kl: Vec<Ratio>,
    pub d_lk: Vec<Ratio>,
}

#[derive(Serialize)]
pub struct PairReport {
    pub knot_k: String,
    pub knot_l: String,
    pub delta_k: u64,
    pub delta_l: u64,
    pub nu_kl: u64,
    pub nu_lk: u64,
    pub v_kl: VSequence,
    pub v_lk: VSequence,
    pub cobordism_genus_bound: u64,
    pub gordian_bound: u64,
    pub concordance_bounds: ConcordanceBounds,
    pub surgery: Option<SurgeryReport>,
}

/// Report on K # mirror(L) and L # mirror(K).
pub fn cmd_pair(k: &KnotSpec, l: &KnotSpec, config: &RunConfig) -> nuplus::Result<PairReport> {
    let (gk, gl) = (&k.resolved, &l.resolved);
    let v_kl = v_sequence_sum(gk, gl);
    let v_lk = v_sequence_sum(gl, gk);
    let surgery = match config.surgery {
        Some(n) => Some(SurgeryReport {
            n,
            d_kl: surgery_d_invariants(&v_kl, n)?,
            d_lk: surgery_d_invariants(&v_lk, n)?,
        }),
        None => None,
    };
    Ok(PairReport {
        knot_k: k.render(),
        knot_l: l.render(),
        delta_k: gk.delta(),
        delta_l: gl.delta(),
        nu_kl: v_kl.nu_plus(),
        nu_lk: v_lk.nu_plus(),
        v_kl,
        v_lk,
        cobordism_genus_bound: cobordism_genus_bound(gk, gl),
        gordian_bound: gordian_bound(gk, gl),
        concordance_bounds: concordance_bounds(gk, gl),
        surgery,
    })
}

#[derive(Serialize)]
pub struct DeformReport {
    pub central: String,
    pub perturbed: String,
    pub obstruction: ObstructionReport,
}

pub fn cmd_deform(central: &KnotSpec, perturbed: &KnotSpec) -> nuplus::Result<DeformReport> {
    Ok(DeformReport {
        central: central.render(),
        perturbed: perturbed.render(),
        obstruction: semicontinuity(&central.resolved, &perturbed.resolved)?,
    })
}

#[derive(Serialize)]
pub struct OracleReport {
    pub knot_k: String,
    pub knot_l: String,
    pub truncation: u64,
    pub oracle: VSequence,
    pub closed_form: VSequence,
    pub matches: bool,
}

/// Chain-level oracle for K # mirror(L), diffed against the closed formula.
pub fn cmd_oracle(k: &KnotSpec, l: &KnotSpec, config: &RunConfig) -> nuplus::Result<OracleReport> {
    let (gk, gl) = (&k.resolved, &l.resolved);
    let floor = default_truncation(gk.delta(), gl.delta());
    let truncation = config.truncation.unwrap_or(floor).max(floor);
    let staircase = StaircaseDescriptor::from_gamma(gl);
    let oracle = v_sequence_oracle(gk, &staircase, truncation)?;
    let closed_form = v_sequence_sum(gk, gl);
    let matches = oracle == closed_form;
    Ok(OracleReport {
        knot_k: k.render(),
        knot_l: l.render(),
        truncation,
        oracle,
        closed_form,
        matches,
    })
}

/// Γ_L(n) − Γ_K(n) profile for verbose pair output; the default bound is
/// lossless, --max-n only extends the displayed range.
pub fn gamma_difference_profile(
    gk: &EnumeratingFunction,
    gl: &EnumeratingFunction,
    max_n: Option<u64>,
) -> Vec<(u64, i64)> {
    let default = gk.delta().max(gl.delta());
    let top = max_n.unwrap_or(default).max(default);
    (0..=top)
        .map(|n| (n, gl.evaluate(n) as i64 - gk.evaluate(n) as i64))
        .collect()
}
