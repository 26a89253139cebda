//! The chain-level oracle against the closed formulas on a torus-knot grid.
//!
//! The heavier full grid runs in the acceptance suite of the CLI crate;
//! here a smaller grid plus the structural properties of the oracle itself.

use nuplus::{
    default_truncation, v_sequence_oracle, v_sequence_sum, AlexanderVector, EnumeratingFunction,
    FilteredUComplex, StaircaseDescriptor, TowerHomology,
};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn torus_grid(max_product: u64) -> Vec<EnumeratingFunction> {
    let mut grid = Vec::new();
    for p in 2..=max_product / 2 {
        for q in (p + 1)..=max_product / p {
            if gcd(p, q) == 1 {
                grid.push(EnumeratingFunction::torus(p, q).unwrap());
            }
        }
    }
    grid
}

fn staircase(g: &EnumeratingFunction) -> StaircaseDescriptor {
    StaircaseDescriptor::from_gamma(g)
}

#[test]
fn oracle_equals_closed_form_on_small_grid() {
    let grid = torus_grid(30);
    for k in &grid {
        for l in &grid {
            let n = default_truncation(k.delta(), l.delta());
            let oracle = v_sequence_oracle(k, &staircase(l), n).unwrap();
            let formula = v_sequence_sum(k, l);
            assert_eq!(oracle, formula, "{:?} # mirror {:?}", k.label(), l.label());
        }
    }
}

#[test]
fn oracle_handles_the_pretzel_knot_in_both_directions() {
    let poly = AlexanderVector::new(vec![5, 4, 2, 1, 0, -1, -2, -4, -5]).unwrap();
    let pretzel = EnumeratingFunction::from_alexander(&poly).unwrap();
    for (p, q) in [(2, 3), (3, 4), (2, 7)] {
        let t = EnumeratingFunction::torus(p, q).unwrap();
        let n = default_truncation(pretzel.delta(), t.delta());
        assert_eq!(
            v_sequence_oracle(&pretzel, &staircase(&t), n).unwrap(),
            v_sequence_sum(&pretzel, &t),
            "pretzel # mirror T({p},{q})"
        );
        assert_eq!(
            v_sequence_oracle(&t, &staircase(&pretzel), n).unwrap(),
            v_sequence_sum(&t, &pretzel),
            "T({p},{q}) # mirror pretzel"
        );
    }
}

#[test]
fn v_at_sweep_is_non_increasing_with_unit_steps() {
    for (k, l) in [
        (
            EnumeratingFunction::torus(3, 7).unwrap(),
            EnumeratingFunction::torus(4, 5).unwrap(),
        ),
        (
            EnumeratingFunction::torus(6, 7).unwrap(),
            EnumeratingFunction::torus(4, 9).unwrap(),
        ),
        (
            EnumeratingFunction::torus(2, 9).unwrap(),
            EnumeratingFunction::unknot(),
        ),
    ] {
        let s = staircase(&l);
        let c = FilteredUComplex::build(&k, &s, default_truncation(k.delta(), l.delta())).unwrap();
        let h = TowerHomology::new(&c).unwrap();
        let mut prev = None;
        for i in 0..=(k.delta() + l.delta() + 1) as i64 {
            let v = h.v_at(i).unwrap();
            if let Some(p) = prev {
                assert!(v <= p && p <= v + 1, "V_{} = {} after {}", i, v, p);
            }
            prev = Some(v);
        }
        assert_eq!(prev, Some(0));
    }
}

#[test]
fn oracle_result_is_independent_of_doubling_the_truncation() {
    let pairs = [
        ((2, 3), (2, 5)),
        ((3, 4), (2, 7)),
        ((4, 5), (3, 7)),
        ((2, 11), (3, 5)),
        ((5, 6), (2, 3)),
    ];
    for ((p1, q1), (p2, q2)) in pairs {
        let k = EnumeratingFunction::torus(p1, q1).unwrap();
        let l = EnumeratingFunction::torus(p2, q2).unwrap();
        let s = staircase(&l);
        let n = default_truncation(k.delta(), l.delta());
        assert_eq!(
            v_sequence_oracle(&k, &s, n).unwrap(),
            v_sequence_oracle(&k, &s, 2 * n).unwrap(),
            "T({p1},{q1}) # mirror T({p2},{q2})"
        );
    }
}
