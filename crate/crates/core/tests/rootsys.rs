mod oracle;

use std::collections::BTreeSet;

use hurwitz_weyl::rootsys::{LengthClass, RootSystem, RootVector};
use proptest::prelude::*;

const SPECS: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "F4", "G2", "E6", "E7",
    "A1+A1", "A2+B2", "G2+A1",
];

fn build(spec: &str) -> RootSystem {
    RootSystem::build(&spec.parse().unwrap()).unwrap()
}

#[test]
fn positive_roots_match_alpha_strings() {
    for spec in SPECS {
        let rs = build(spec);
        let o = oracle::Oracle::new(&rs.spec().to_string());
        let ours: BTreeSet<Vec<i32>> = rs.positive_roots().iter().map(|r| r.coeffs().to_vec()).collect();
        let theirs: BTreeSet<Vec<i32>> = o.positive.iter().cloned().collect();
        assert_eq!(ours, theirs, "{spec}");
        assert_eq!(rs.roots().len(), 2 * o.positive.len());
    }
}

#[test]
fn root_counts() {
    for (f, r) in [('A', 1), ('A', 4), ('B', 3), ('C', 4), ('D', 4), ('D', 5), ('E', 6), ('E', 7), ('E', 8), ('F', 4), ('G', 2)] {
        let rs = build(&format!("{f}{r}"));
        assert_eq!(rs.roots().len(), oracle::num_roots(f, r), "{f}{r}");
    }
}

#[test]
fn cartan_and_gram() {
    for spec in SPECS {
        let rs = build(spec);
        let o = oracle::Oracle::new(&rs.spec().to_string());
        assert_eq!(rs.cartan(), o.cartan.as_slice(), "{spec}");
        assert_eq!(rs.gram(), o.gram.as_slice(), "{spec}");
    }
    let dets = [("A3", 4), ("B4", 2), ("C3", 2), ("D4", 4), ("E6", 3), ("E7", 2), ("F4", 1), ("G2", 1)];
    for (spec, det) in dets {
        assert_eq!(oracle::determinant(build(spec).cartan()), det, "{spec}");
    }
}

#[test]
fn normalization() {
    for spec in SPECS {
        let rs = build(spec);
        for c in 0..rs.num_components() {
            let norms: BTreeSet<i64> = (0..rs.num_positive())
                .filter(|&p| rs.component_of(p) == c)
                .map(|p| rs.norm(p))
                .collect();
            let comp = rs.spec().components()[c];
            let expected: BTreeSet<i64> = match comp.family {
                hurwitz_weyl::rootsys::Family::G => [2, 6].into(),
                f if f.is_simply_laced() => [2].into(),
                _ => [2, 4].into(),
            };
            assert_eq!(norms, expected, "{spec}");
            for p in 0..rs.num_positive() {
                let class = if rs.norm(p) == 2 { LengthClass::Short } else { LengthClass::Long };
                assert_eq!(rs.length_class(p), class);
            }
        }
    }
}

#[test]
fn dominant_short_root() {
    for spec in SPECS {
        let rs = build(spec);
        for c in 0..rs.num_components() {
            let lambda = rs.dominant_short(c).clone();
            assert_eq!(rs.inner_product(&lambda, &lambda).unwrap(), 2);
            for (p, alpha) in rs.positive_roots().iter().enumerate() {
                if rs.component_of(p) != c || *alpha == lambda {
                    continue;
                }
                let k = rs.cartan_integer(&lambda, alpha).unwrap();
                assert!(k == 0 || k == 1, "{spec}: <λ, {alpha}^v> = {k}");
            }
            for i in rs.component_range(c) {
                assert!(rs.inner_product(&lambda, rs.simple_root(i)).unwrap() >= 0);
            }
        }
    }
}

#[test]
fn simple_roots_come_first() {
    for spec in SPECS {
        let rs = build(spec);
        for i in 0..rs.rank() {
            assert_eq!(rs.positive_roots()[i], RootVector::unit(rs.rank(), i));
        }
        let h: Vec<i64> = rs.positive_roots().iter().map(RootVector::height).collect();
        assert!(h.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn reflections_permute_roots() {
    for spec in SPECS {
        let rs = build(spec);
        let all: BTreeSet<RootVector> = rs.roots().into_iter().collect();
        for alpha in rs.positive_roots() {
            let img: BTreeSet<RootVector> =
                all.iter().map(|x| rs.reflect(alpha, x).unwrap()).collect();
            assert_eq!(img, all, "{spec}");
        }
    }
}

#[test]
fn short_and_long_roots_are_single_orbits() {
    for spec in ["B3", "C3", "F4", "G2", "A3", "D4"] {
        let rs = build(spec);
        let n = rs.num_positive();
        let mut orbit = vec![usize::MAX; n];
        for start in 0..n {
            if orbit[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            orbit[start] = start;
            while let Some(q) = stack.pop() {
                for p in 0..rs.rank() {
                    let r = rs.conjugate_index(p, q);
                    if orbit[r] == usize::MAX {
                        orbit[r] = start;
                        stack.push(r);
                    }
                }
            }
        }
        let classes: BTreeSet<usize> = orbit.iter().copied().collect();
        let expected = if rs.spec().components()[0].is_simply_laced() { 1 } else { 2 };
        assert_eq!(classes.len(), expected, "{spec}");
        for p in 0..n {
            assert_eq!(rs.length_class(p), rs.length_class(orbit[p]));
        }
    }
}

proptest! {
    #[test]
    fn reflection_is_involutive_isometry(spec in prop::sample::select(SPECS), a in 0usize..1000, b in 0usize..1000, c in 0usize..1000) {
        let rs = build(spec);
        let n = rs.num_positive();
        let (alpha, x, y) = (&rs.positive_roots()[a % n], &rs.positive_roots()[b % n], &rs.positive_roots()[c % n]);
        let sx = rs.reflect(alpha, x).unwrap();
        prop_assert!(rs.is_root(&sx));
        prop_assert_eq!(&rs.reflect(alpha, &sx).unwrap(), x);
        let sy = rs.reflect(alpha, y).unwrap();
        prop_assert_eq!(rs.inner_product(&sx, &sy).unwrap(), rs.inner_product(x, y).unwrap());
        prop_assert_eq!(rs.reflect(alpha, alpha).unwrap(), -alpha);
    }

    #[test]
    fn spec_strings_roundtrip(spec in prop::sample::select(SPECS)) {
        let parsed: hurwitz_weyl::RootSystemSpec = spec.parse().unwrap();
        let again: hurwitz_weyl::RootSystemSpec = parsed.to_string().parse().unwrap();
        prop_assert_eq!(parsed, again);
    }
}

#[test]
fn bad_specs_are_rejected() {
    for bad in ["", "A0", "B1", "C2", "D3", "E9", "F3", "G3", "X2", "A", "A2+", "a-2"] {
        assert!(bad.parse::<hurwitz_weyl::RootSystemSpec>().is_err(), "{bad}");
    }
}
