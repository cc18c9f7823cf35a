use super::*;
use crate::algebra::{Poly, RatFunc};
use crate::curve::CurveId;
use crate::powersum::{PowerSums, SumMode};
use proptest::prelude::*;

fn targets(id: CurveId) -> Vec<(&'static str, i64, SumMode, Vec<u32>)> {
    use SumMode::*;
    match id {
        CurveId::CaseI => vec![
            ("F_1", 1, At, vec![1]), ("F_<1", 1, Below, vec![1]), ("F_12", 3, At, vec![1, 2]), ("F_3", 3, At, vec![3]),
            ("F_<3", 3, Below, vec![3]), ("F_<=12", 3, UpTo, vec![1, 2]), ("F_34", 7, At, vec![3, 4]),
            ("F_<=34", 7, UpTo, vec![3, 4]), ("F_<7", 7, Below, vec![7]),
        ],
        CurveId::CaseII => vec![
            ("F_1", 1, At, vec![1]), ("F_<2", 2, Below, vec![2]), ("F_26", 8, At, vec![2, 6]),
            ("F_<8", 8, Below, vec![8]), ("F_<=26", 8, UpTo, vec![2, 6]),
        ],
        CurveId::CaseIII => vec![
            ("F_1", 1, At, vec![1]), ("F_<3", 3, Below, vec![3]), ("F_3,12", 15, At, vec![3, 12]),
            ("F_<15", 15, Below, vec![15]), ("F_<=3,12", 15, UpTo, vec![3, 12]),
        ],
        _ => vec![
            ("F_1", 1, At, vec![1]), ("F_<1", 1, Below, vec![1]), ("F_12", 3, At, vec![1, 2]), ("F_3", 3, At, vec![3]),
            ("F_<3", 3, Below, vec![3]), ("F_<=12", 3, UpTo, vec![1, 2]),
        ],
    }
}

const CASES: [CurveId; 4] = [CurveId::CaseI, CurveId::CaseII, CurveId::CaseIII, CurveId::CaseIV];

#[test]
fn specializations_match_power_sums() {
    for id in CASES {
        let c = Curve::builtin(id);
        let lib = builtin_ffunctions(c).unwrap();
        let s = PowerSums::shared(c);
        for (name, w, mode, t) in targets(id) {
            for f in [lib.formula(name), lib.display(name)].into_iter().flatten() {
                for d in 1..5u32 {
                    let lhs = ell_coefficient(c, d).unwrap().pow(w).mul(&s.evaluate(d, &t, mode));
                    assert_eq!(f.specialize(d).unwrap(), lhs, "{id} {name} at d = {d}");
                }
            }
        }
    }
}

#[test]
fn formulas_agree_with_displays() {
    for id in CASES {
        let lib = builtin_ffunctions(Curve::builtin(id)).unwrap();
        let names = lib.cross_checked();
        assert!(!names.is_empty(), "{id}");
        for name in names {
            assert_eq!(lib.formula(name), lib.display(name), "{id} {name}");
        }
    }
}

#[test]
fn g_is_the_ell_ratio() {
    for id in CASES {
        let c = Curve::builtin(id);
        let lib = builtin_ffunctions(c).unwrap();
        for d in 1..6 {
            let r = ell_coefficient(c, d).unwrap().div(&ell_coefficient(c, d - 1).unwrap()).unwrap();
            assert_eq!(lib.g().specialize(d).unwrap(), r, "{id} d = {d}");
        }
    }
}

#[test]
fn unknown_names_are_errors() {
    let lib = builtin_ffunctions(Curve::builtin(CurveId::CaseI)).unwrap();
    assert!(lib.get("F_99").is_err());
    assert!(lib.formula("F_99").is_none());
}

#[test]
fn leading_ratio_of_the_weight_seven_pair() {
    let c = Curve::builtin(CurveId::CaseI);
    let lib = builtin_ffunctions(c).unwrap();
    let le = lib.get("F_<=34").unwrap();
    let lt = lib.get("F_<7").unwrap();
    let r = lt.leading_ratio(le).unwrap();
    assert_eq!(r.alpha_diff, 0);
    let p = |v: &[i64]| Poly::from_ints(c.field, v);
    let want = RatFunc::new(p(&[1, 0, 0, 1, 0, 1, 1, 0, 1]), p(&[0, 0, 1, 0, 1]));
    assert_eq!(r.ratio, KElem::from_ratfunc(c, &want));
}

#[test]
fn leading_term_of_a_monomial() {
    let c = Curve::builtin(CurveId::CaseI);
    // X^3 specializes to x^(3 q^k)
    let f = FFunction::big_x(c).pow(3).unwrap();
    let t = f.weighted_leading_term().unwrap();
    assert_eq!(t.monomial, (3, 0));
    let d = 4;
    let v = f.specialize(d).unwrap();
    assert_eq!(v.degree(), Some(t.alpha * (c.q() as i64).pow(f.exponent_at(d) as u32) + t.beta));
}

#[test]
fn negative_exponents_are_out_of_range() {
    let c = Curve::builtin(CurveId::CaseI);
    let f = FFunction::big_x(c).twist(-3);
    assert!(f.specialize(0).is_err());
    assert_eq!(f.twist(3), FFunction::big_x(c));
}

fn arb_small(c: Curve) -> impl Strategy<Value = FFunction> {
    let q = c.q() as u8;
    (prop::collection::vec((0..q, 0usize..3, 0usize..2, 0usize..3, 0usize..2), 1..5), 0i32..2).prop_map(move |(terms, off)| {
        let mut num = FPoly::zero(c);
        for (a, i, j, k, l) in terms {
            num = num.add(&FPoly::monomial(c, a, i, j, k, l));
        }
        FFunction::from_fpoly(num).twist(off)
    })
}

fn case_strategy() -> impl Strategy<Value = Curve> {
    prop::sample::select(CASES.to_vec()).prop_map(Curve::builtin)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn twist_shifts_specialization((f, g) in case_strategy().prop_flat_map(|c| (arb_small(c), arb_small(c))), d in 4u32..7) {
        prop_assert_eq!(f.twist(1).specialize(d).unwrap(), f.specialize(d + 1).unwrap());
        prop_assert_eq!(f.twist(-1).specialize(d).unwrap(), f.specialize(d - 1).unwrap());
        let s = f.mul(&g).add(&f);
        prop_assert_eq!(s.specialize(d).unwrap(), f.specialize(d).unwrap().mul(&g.specialize(d).unwrap()).add(&f.specialize(d).unwrap()));
        let t = f.twist(1).sub(&g);
        prop_assert_eq!(t.specialize(d).unwrap(), f.specialize(d + 1).unwrap().sub(&g.specialize(d).unwrap()));
    }

    #[test]
    fn quotients_specialize((f, g) in case_strategy().prop_flat_map(|c| (arb_small(c), arb_small(c))), d in 1u32..4) {
        prop_assume!(!g.is_zero());
        let Ok(h) = f.div(&g) else { return Ok(()) };
        let (Ok(hv), Ok(gv)) = (h.specialize(d), g.specialize(d)) else { return Ok(()) };
        prop_assert_eq!(hv.mul(&gv), f.specialize(d).unwrap());
    }
}
