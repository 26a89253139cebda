//! Rendering of command reports as text, JSON, or CSV.
//!
//! JSON is emitted from the serde representation with a fixed key set per
//! command; integers stay integers and correction terms are fraction
//! strings. CSV uses one row per quantity. Text mode lays out the same
//! numbers for eyeballing.

use crate::commands::{DeformReport, InvariantsReport, OracleReport, PairReport};
use crate::tables::TableRow;
use nuplus::{ObstructionReason, Verdict};

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub fn json<T: serde::Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize")
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_owned()
    }
}

fn csv_table(rows: &[(String, String, String, String)]) -> String {
    let mut out = String::from("knot_k,knot_l,quantity,value\n");
    for (k, l, quantity, value) in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            csv_escape(k),
            csv_escape(l),
            csv_escape(quantity),
            csv_escape(value)
        ));
    }
    out
}

pub fn invariants_text(r: &InvariantsReport, verbose: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!("knot:                {}\n", r.knot));
    out.push_str(&format!("delta (genus):       {}\n", r.function.delta()));
    out.push_str(&format!(
        "semigroup prefix:    {}\n",
        join(r.function.prefix())
    ));
    out.push_str(&format!("gaps:                {}\n", join(&r.gaps)));
    out.push_str(&format!(
        "semigroup closed:    {}\n",
        r.function.semigroup_closed()
    ));
    out.push_str(&format!("staircase a:         {}\n", join(r.staircase.a())));
    out.push_str(&format!(
        "staircase a':        {}\n",
        join(r.staircase.a_prime())
    ));
    out.push_str(&format!(
        "alexander exponents: {}\n",
        join(&r.alexander_exponents)
    ));
    out.push_str(&format!(
        "V-sequence:          {}\n",
        join(r.v_sequence.values())
    ));
    out.push_str(&format!("nu+:                 {}\n", r.nu_plus));
    if verbose {
        out.push_str(&format!(
            "gamma values:        {}\n",
            join(
                &(0..=r.function.delta() + 2)
                    .map(|n| r.function.evaluate(n))
                    .collect::<Vec<_>>()
            )
        ));
    }
    out
}

pub fn invariants_csv(r: &InvariantsReport) -> String {
    let k = r.knot.clone();
    let rows = vec![
        (
            k.clone(),
            String::new(),
            "delta".into(),
            r.function.delta().to_string(),
        ),
        (
            k.clone(),
            String::new(),
            "prefix".into(),
            join(r.function.prefix()),
        ),
        (k.clone(), String::new(), "gaps".into(), join(&r.gaps)),
        (
            k.clone(),
            String::new(),
            "semigroup_closed".into(),
            r.function.semigroup_closed().to_string(),
        ),
        (
            k.clone(),
            String::new(),
            "staircase_a".into(),
            join(r.staircase.a()),
        ),
        (
            k.clone(),
            String::new(),
            "staircase_a_prime".into(),
            join(r.staircase.a_prime()),
        ),
        (
            k.clone(),
            String::new(),
            "alexander_exponents".into(),
            join(&r.alexander_exponents),
        ),
        (
            k.clone(),
            String::new(),
            "v_sequence".into(),
            join(r.v_sequence.values()),
        ),
        (
            k.clone(),
            String::new(),
            "nu_plus".into(),
            r.nu_plus.to_string(),
        ),
    ];
    csv_table(&rows)
}

pub fn pair_text(r: &PairReport, profile: Option<&[(u64, i64)]>) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "pair:                  K = {}, L = {}\n",
        r.knot_k, r.knot_l
    ));
    out.push_str(&format!(
        "delta:                 {} / {}\n",
        r.delta_k, r.delta_l
    ));
    out.push_str(&format!("nu+(K # mL):           {}\n", r.nu_kl));
    out.push_str(&format!("nu+(L # mK):           {}\n", r.nu_lk));
    out.push_str(&format!(
        "V(K # mL):             {}\n",
        join(r.v_kl.values())
    ));
    out.push_str(&format!(
        "V(L # mK):             {}\n",
        join(r.v_lk.values())
    ));
    out.push_str(&format!(
        "cobordism genus bound: {}\n",
        r.cobordism_genus_bound
    ));
    out.push_str(&format!("gordian bound:         {}\n", r.gordian_bound));
    out.push_str(&format!(
        "u, u_c, u_s, c* bound: {}\n",
        r.concordance_bounds.unknotting
    ));
    if let Some(surgery) = &r.surgery {
        out.push_str(&format!(
            "d S^3_{}(K # mL):       {}\n",
            surgery.n,
            join(&surgery.d_kl)
        ));
        out.push_str(&format!(
            "d S^3_{}(L # mK):       {}\n",
            surgery.n,
            join(&surgery.d_lk)
        ));
    }
    if let Some(profile) = profile {
        out.push_str("gamma_L(n) - gamma_K(n):\n");
        for (n, diff) in profile {
            out.push_str(&format!("  n = {n:>4}: {diff}\n"));
        }
    }
    out
}

pub fn pair_csv(r: &PairReport) -> String {
    let (k, l) = (r.knot_k.clone(), r.knot_l.clone());
    let mut rows = vec![
        (
            k.clone(),
            l.clone(),
            "delta_k".into(),
            r.delta_k.to_string(),
        ),
        (
            k.clone(),
            l.clone(),
            "delta_l".into(),
            r.delta_l.to_string(),
        ),
        (k.clone(), l.clone(), "nu_kl".into(), r.nu_kl.to_string()),
        (k.clone(), l.clone(), "nu_lk".into(), r.nu_lk.to_string()),
        (k.clone(), l.clone(), "v_kl".into(), join(r.v_kl.values())),
        (k.clone(), l.clone(), "v_lk".into(), join(r.v_lk.values())),
        (
            k.clone(),
            l.clone(),
            "cobordism_genus_bound".into(),
            r.cobordism_genus_bound.to_string(),
        ),
        (
            k.clone(),
            l.clone(),
            "gordian_bound".into(),
            r.gordian_bound.to_string(),
        ),
        (
            k.clone(),
            l.clone(),
            "concordance_bound".into(),
            r.concordance_bounds.unknotting.to_string(),
        ),
    ];
    if let Some(surgery) = &r.surgery {
        rows.push((
            k.clone(),
            l.clone(),
            format!("d_surgery_{}_kl", surgery.n),
            join(&surgery.d_kl),
        ));
        rows.push((
            k.clone(),
            l.clone(),
            format!("d_surgery_{}_lk", surgery.n),
            join(&surgery.d_lk),
        ));
    }
    csv_table(&rows)
}

pub fn deform_text(r: &DeformReport) -> String {
    let o = &r.obstruction;
    let mut out = String::new();
    out.push_str(&format!(
        "deformation:        {} -> {}\n",
        r.central, r.perturbed
    ));
    out.push_str(&format!(
        "delta:              {} -> {}\n",
        o.delta_k, o.delta_l
    ));
    out.push_str(&format!("genus budget:       {}\n", o.genus_budget));
    out.push_str(&format!("nu+ bounds:         {} / {}\n", o.nu_kl, o.nu_lk));
    out.push_str(&format!(
        "verdict:            {}\n",
        match o.verdict {
            Verdict::Allowed => "allowed",
            Verdict::Obstructed => "obstructed",
        }
    ));
    match o.reason {
        ObstructionReason::Semicontinuity => {
            let w = o.semicontinuity_witness.expect("witness present");
            out.push_str(&format!(
                "reason:             semicontinuity, R_K({}) = {} > R_L({}) = {}\n",
                w.n, w.count_central, w.n, w.count_perturbed
            ));
        }
        ObstructionReason::GenusBound => {
            let w = o.genus_witness.expect("witness present");
            out.push_str(&format!(
                "reason:             genus bound, nu+ = {} > budget = {}\n",
                w.nu_bound, w.genus_budget
            ));
        }
        ObstructionReason::None => {}
    }
    if o.reason == ObstructionReason::Semicontinuity {
        if let Some(w) = o.genus_witness {
            out.push_str(&format!(
                "also:               genus bound, nu+ = {} > budget = {}\n",
                w.nu_bound, w.genus_budget
            ));
        }
    }
    out
}

pub fn deform_csv(r: &DeformReport) -> String {
    let o = &r.obstruction;
    let (k, l) = (r.central.clone(), r.perturbed.clone());
    let verdict = match o.verdict {
        Verdict::Allowed => "allowed",
        Verdict::Obstructed => "obstructed",
    };
    let reason = match o.reason {
        ObstructionReason::Semicontinuity => "semicontinuity",
        ObstructionReason::GenusBound => "genus_bound",
        ObstructionReason::None => "none",
    };
    let witness = match o.reason {
        ObstructionReason::Semicontinuity => o
            .semicontinuity_witness
            .map(|w| w.n.to_string())
            .unwrap_or_default(),
        ObstructionReason::GenusBound => o
            .genus_witness
            .map(|w| format!("{} {}", w.nu_bound, w.genus_budget))
            .unwrap_or_default(),
        ObstructionReason::None => String::new(),
    };
    csv_table(&[
        (k.clone(), l.clone(), "verdict".into(), verdict.into()),
        (k.clone(), l.clone(), "reason".into(), reason.into()),
        (k.clone(), l.clone(), "witness".into(), witness),
        (
            k.clone(),
            l.clone(),
            "delta_k".into(),
            o.delta_k.to_string(),
        ),
        (
            k.clone(),
            l.clone(),
            "delta_l".into(),
            o.delta_l.to_string(),
        ),
        (
            k.clone(),
            l.clone(),
            "genus_budget".into(),
            o.genus_budget.to_string(),
        ),
        (k.clone(), l.clone(), "nu_kl".into(), o.nu_kl.to_string()),
        (k.clone(), l.clone(), "nu_lk".into(), o.nu_lk.to_string()),
    ])
}

pub fn oracle_text(r: &OracleReport) -> String {
    format!(
        "pair:        K = {}, L = {}\ntruncation:  {}\noracle:      {}\nclosed form: {}\nresult:      {}\n",
        r.knot_k,
        r.knot_l,
        r.truncation,
        join(r.oracle.values()),
        join(r.closed_form.values()),
        if r.matches { "PASS" } else { "FAIL" }
    )
}

pub fn oracle_csv(r: &OracleReport) -> String {
    csv_table(&[
        (
            r.knot_k.clone(),
            r.knot_l.clone(),
            "truncation".into(),
            r.truncation.to_string(),
        ),
        (
            r.knot_k.clone(),
            r.knot_l.clone(),
            "oracle".into(),
            join(r.oracle.values()),
        ),
        (
            r.knot_k.clone(),
            r.knot_l.clone(),
            "closed_form".into(),
            join(r.closed_form.values()),
        ),
        (
            r.knot_k.clone(),
            r.knot_l.clone(),
            "matches".into(),
            r.matches.to_string(),
        ),
    ])
}

pub fn tables_text(rows: &[TableRow]) -> String {
    let name_width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!(
            "{}  {:<name_width$}  computed {}  expected {}\n",
            if r.pass { "PASS" } else { "FAIL" },
            r.name,
            r.computed,
            r.expected,
        ));
    }
    let passed = rows.iter().filter(|r| r.pass).count();
    out.push_str(&format!("{passed}/{} rows pass\n", rows.len()));
    out
}

pub fn tables_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("name,computed,expected,pass\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            csv_escape(&r.name),
            csv_escape(&r.computed),
            csv_escape(&r.expected),
            r.pass
        ));
    }
    out
}
