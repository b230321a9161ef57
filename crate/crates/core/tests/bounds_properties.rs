use hypercell::bounds::{average_face_ratio, dimension_exclusion, dimension_table, nk_bound, NkBound, NkQuery};
use hypercell::exact::{self, int};
use hypercell::lattice::{canonical_24cell, hypercube};

/// Multiplicative formula in u128; exact for the ranges used here.
fn choose(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// The bound as a reduced fraction, or `None` when the denominator is 0.
fn oracle(n: u128, k: u128, l: u128) -> Option<(u128, u128)> {
    let (a, b) = (n / 2, n.div_ceil(2));
    let den = choose(a, k) + choose(b, k);
    if den == 0 {
        return None;
    }
    let num = choose(n - l, n - k) * (choose(a, l) + choose(b, l));
    let g = gcd(num, den);
    Some((num / g, den / g))
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn bound_matches_oracle() {
    for n in 2..=64u128 {
        for k in 1..n {
            for l in 0..k {
                let ours = nk_bound(NkQuery::new(n as usize, k as usize, l as usize).unwrap());
                let want = oracle(n, k, l).map(|(p, q)| if q == 1 { p.to_string() } else { format!("{p}/{q}") });
                assert_eq!(ours.value().map(exact::to_text), want, "n={n} k={k} l={l}");
            }
        }
    }
}

#[test]
fn rank_four_applicability_starts_at_seven() {
    for n in 5..=64 {
        let applicable = nk_bound(NkQuery::new(n, 4, 3).unwrap()) != NkBound::Inapplicable;
        assert_eq!(applicable, n.div_ceil(2) >= 4, "n = {n}");
    }
}

#[test]
fn exclusion_is_the_tail_from_seven() {
    for n_max in 7..=64 {
        assert_eq!(dimension_exclusion(24, n_max), (7..=n_max).collect::<Vec<_>>());
    }
    let table = dimension_table(24, 64);
    assert_eq!(table.len(), 61);
    assert!(table.iter().all(|r| r.excluded == (r.n >= 7)));
}

#[test]
fn averages_of_known_lattices() {
    let c = canonical_24cell();
    assert_eq!(average_face_ratio(&c, 3, 1).unwrap(), int(12));
    assert_eq!(average_face_ratio(&c, 2, 0).unwrap(), int(3));
    assert_eq!(average_face_ratio(&hypercube(4).unwrap(), 3, 2).unwrap(), int(6));
}
