use super::{Curve, RingElem};
use crate::algebra::Poly;

/// The monic monomial of degree `d`, if one exists.
pub fn leading_monomial(curve: Curve, d: u32) -> Option<RingElem> {
    let f = curve.field;
    let wx = curve.weight_x();
    if !curve.has_y() {
        return Some(RingElem::x(curve).pow(d as u64));
    }
    if d.is_multiple_of(wx) {
        return Some(RingElem::from_poly(curve, Poly::monomial(f, 1, (d / wx) as usize)));
    }
    let wy = curve.weight_y();
    (d >= wy && (d - wy).is_multiple_of(wx)).then(|| RingElem::new(curve, Poly::zero(f), Poly::monomial(f, 1, ((d - wy) / wx) as usize)))
}

/// Monomials `x^i`, `y x^i` of degree `< d`: an F_q-basis of the elements of
/// degree below `d` (together with zero).
pub fn lower_basis(curve: Curve, d: u32) -> Vec<RingElem> {
    let f = curve.field;
    let wx = curve.weight_x();
    let mut out = Vec::new();
    let mut i = 0;
    while wx * i < d {
        out.push(RingElem::from_poly(curve, Poly::monomial(f, 1, i as usize)));
        i += 1;
    }
    if curve.has_y() {
        let wy = curve.weight_y();
        let mut i = 0;
        while wx * i + wy < d {
            out.push(RingElem::new(curve, Poly::zero(f), Poly::monomial(f, 1, i as usize)));
            i += 1;
        }
    }
    out
}

/// Number of monic elements of degree `d`.
pub fn monic_count(curve: Curve, d: u32) -> u64 {
    if leading_monomial(curve, d).is_none() {
        return 0;
    }
    (curve.q() as u64).pow(lower_basis(curve, d).len() as u32)
}

/// All monic elements of degree `d`, in a fixed order.
pub fn monic_elements(curve: Curve, d: u32) -> Vec<RingElem> {
    let Some(lead) = leading_monomial(curve, d) else {
        return Vec::new();
    };
    let basis = lower_basis(curve, d);
    let q = curve.q() as usize;
    let f = curve.field;
    let n = basis.len();
    let total = q.pow(n as u32);
    let deg0 = basis.iter().filter(|b| b.p1().is_zero()).count();
    let mut out = Vec::with_capacity(total);
    let mut digits = vec![0u8; n];
    for _ in 0..total {
        // split digits into the x-part and y-part coefficient vectors
        let mut c0: Vec<u8> = digits[..deg0].to_vec();
        let mut c1: Vec<u8> = digits[deg0..].to_vec();
        let l0 = lead.p0().coeffs();
        let l1 = lead.p1().coeffs();
        merge(&mut c0, l0);
        merge(&mut c1, l1);
        out.push(RingElem::new(curve, Poly::from_coeffs(f, c0), Poly::from_coeffs(f, c1)));
        for dgt in digits.iter_mut() {
            *dgt += 1;
            if (*dgt as usize) < q {
                break;
            }
            *dgt = 0;
        }
    }
    out
}

fn merge(c: &mut Vec<u8>, lead: &[u8]) {
    if lead.len() > c.len() {
        c.resize(lead.len(), 0);
    }
    for (i, &a) in lead.iter().enumerate() {
        if a != 0 {
            c[i] = a;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveId;

    #[test]
    fn counts_match_riemann_roch() {
        for id in CurveId::ALL {
            let c = Curve::builtin(id);
            let g = c.genus();
            for d in 0..10u32 {
                let n = monic_count(c, d);
                let els = monic_elements(c, d);
                assert_eq!(els.len() as u64, n);
                assert!(els.iter().all(|a| a.is_monic() && a.degree() == Some(d as i64)), "{id} d={d}");
                if d >= 2 * g {
                    assert_eq!(n, (c.q() as u64).pow(d - g), "{id} d={d}");
                }
            }
        }
        let c = Curve::builtin(CurveId::CaseIV);
        assert_eq!(monic_count(c, 1), 0);
        assert_eq!(monic_count(c, 3), 0);
        assert_eq!(monic_count(c, 2), 2);
        assert_eq!(monic_count(c, 4), 4);
        assert_eq!(monic_count(c, 5), 8);
    }
}
