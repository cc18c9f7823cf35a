//! Built-in F-functions of the four cases.
//!
//! Each case has functions built from closed formulas and functions read
//! from shipped transcriptions of explicit numerators and denominators.
//! When a name has both, [`FunctionLibrary::get`] returns the formula and
//! the tests check that the two agree.

use super::parse::{ff_parse, parse_fpoly};
use super::FFunction;
use crate::curve::{Curve, CurveId, KElem};
use crate::data;
use crate::error::{Error, Result};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

pub struct FunctionLibrary {
    curve: Curve,
    formulas: BTreeMap<String, FFunction>,
    displays: BTreeMap<String, FFunction>,
}

impl FunctionLibrary {
    pub fn curve(&self) -> Curve {
        self.curve
    }

    /// The formula if there is one, else the transcription.
    pub fn get(&self, name: &str) -> Result<&FFunction> {
        self.formulas
            .get(name)
            .or_else(|| self.displays.get(name))
            .ok_or_else(|| Error::InvalidSpec(format!("no F-function `{name}` for {}", self.curve.id)))
    }

    pub fn formula(&self, name: &str) -> Option<&FFunction> {
        self.formulas.get(name)
    }

    pub fn display(&self, name: &str) -> Option<&FFunction> {
        self.displays.get(name)
    }

    pub fn names(&self) -> Vec<&str> {
        let mut v: Vec<&str> = self.formulas.keys().chain(self.displays.keys()).map(|s| s.as_str()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// The function `g` with `g(d) = l_d / l_(d-1)`.
    pub fn g(&self) -> &FFunction {
        &self.formulas["g"]
    }

    /// Names present both as formula and as transcription.
    pub fn cross_checked(&self) -> Vec<&str> {
        self.formulas.keys().filter(|k| self.displays.contains_key(*k)).map(|s| s.as_str()).collect()
    }
}

struct Builder {
    curve: Curve,
    f: BTreeMap<String, FFunction>,
}

impl Builder {
    fn p(&self, s: &str) -> FFunction {
        FFunction::from_fpoly(parse_fpoly(self.curve, s).expect("built-in expression"))
    }

    fn q(&self, num: &str, den: &str) -> FFunction {
        self.p(num).div(&self.p(den)).expect("nonzero built-in denominator")
    }

    fn put(&mut self, name: &str, f: FFunction) {
        self.f.insert(name.to_string(), f);
    }
}

fn pw(f: &FFunction, e: i64) -> FFunction {
    f.pow(e).expect("nonzero base")
}

fn dv(a: &FFunction, b: &FFunction) -> FFunction {
    a.div(b).expect("nonzero divisor")
}

fn case_i(b: &mut Builder) {
    let g = b.q("Y + y + X (X + x)", "X^2 + x + 1");
    let f1 = b.q("X + x^2", "Y + y + x (X + x) + x^2 + x");
    let lt1 = pw(&g, 2).add(&pw(&f1, 2)).add(&f1);
    let f12 = f1.mul(&pw(&lt1, 2));
    let f3 = pw(&f1, 2).mul(&pw(&g, 2).add(&pw(&f1, 2)));
    let gm = b.q("Y^2 + y^4 + X^2 (X^2 + x^4)", "X^4 + x^4 + 1");
    let f1sq = pw(&f1, 2).add(&f1);
    let a2 = f1.mul(&dv(&pw(&g, 4).mul(&gm), &b.p("x^2 + x")).add(&pw(&lt1, 2).mul(&f1sq)));
    let lt3 = dv(&a2, &f1).add(&pw(&lt1, 3));
    let c = b.p("Y + y + x (X + x) + x^2 + x");
    let cm = b.p("Y + y^2 + x^2 (X + x^2) + x^4 + x^2");
    let u = b.q("(X + x^2)(X^3 + X^2 x)", "x^2 + x").add(&b.q("X^2", "x")).add(&b.p("X x + 1"));
    let c2 = pw(&c, 2);
    let corr = dv(&pw(&g.twist(1), 3).mul(&c2).mul(&f12), &cm.mul(&f12.twist(1)));
    let j = dv(&u.add(&c2), &FFunction::one(b.curve).add(&corr));
    let le12 = dv(&j.mul(&f12), &cm);
    let f34 = f3.mul(&pw(&lt1, 4));
    // S_d(7) by Newton's identities; the elementary symmetric functions of the
    // 1/a are F_1, F_1 F_<1 and A_2 in degrees 1, 2 and 4, and h_n = F_(n+1) / F_1
    let (a0, a1) = (f1.clone(), f1.mul(&lt1));
    let mut h = vec![FFunction::one(b.curve), a0.clone()];
    for n in 2..=6 {
        let mut t = a0.mul(&h[n - 1]).add(&a1.mul(&h[n - 2]));
        if n >= 4 {
            t = t.add(&a2.mul(&h[n - 4]));
        }
        h.push(t);
    }
    let f7 = a0.mul(&h[6]);
    for (n, f) in [
        ("g", g),
        ("F_1", f1),
        ("F_<1", lt1),
        ("F_12", f12),
        ("F_3", f3),
        ("g_m", gm),
        ("A_2", a2),
        ("F_<3", lt3),
        ("C", c),
        ("C_m", cm),
        ("U", u),
        ("J", j),
        ("F_<=12", le12),
        ("F_34", f34),
        ("F_7", f7),
    ] {
        b.put(n, f);
    }
}

fn case_ii(b: &mut Builder) {
    // g^(1) is read off the Frobenius difference equation for S_<=d(2,6)
    let g = b.q("(x + 1 - X) Y - y", "X^3 - x + 1");
    let g3_formula = b.q("-(Y - y)^3 + Y^3 (X - x)^3", "Y (Y^3 - Y) - (X - x^3) - Y^3 Y (X^3 - X)");
    let f1 = b.q("-(X - x^3)", "X^2 + (x + 1) X + y Y + x^2 - x + 1");
    let y = FFunction::y(b.curve);
    let g3 = pw(&g, 3);
    let f1c = pw(&f1, 3).sub(&pw(&f1, 2));
    let lt2 = f1c.sub(&y.mul(&g3));
    let f26 = pw(&f1, 2).mul(&pw(&lt2, 3));
    let gg = pw(&g, 9).mul(&pw(&g.twist(-1), 9));
    let c = b.q("x^3 - x + 1", "x^3 - x");
    let tail = f1c.mul(&pw(&y, 3).mul(&pw(&g, 9)).sub(&pw(&f1, 9)).add(&pw(&f1, 6)));
    let lt8 = c.mul(&gg).neg().add(&pw(&lt2.neg(), 4)).add(&tail);
    let a1 = f1.mul(&lt2.neg());
    let a2 = f1.mul(&c.mul(&gg).sub(&tail));
    for (n, f) in [
        ("g", g),
        ("g^3", g3),
        ("g^3 (displayed)", g3_formula),
        ("F_1", f1),
        ("F_<2", lt2),
        ("F_26", f26),
        ("F_<8", lt8),
        ("A_1", a1),
        ("A_2", a2),
    ] {
        b.put(n, f);
    }
}

fn case_iii(b: &mut Builder) {
    let g = b.q("Y + y + X^2 (X - x)", "X^4 + x");
    let f1 = b.q("X + x^4", "x^2 X^2 + X Y + (y + 1) X + x Y + x y");
    let k = b.p("x^4 + x");
    let c5 = b.p("x^12 + x^9 + x^6 + x^3 + 1");
    let f1c = pw(&f1, 4).add(&pw(&f1, 3));
    let lt3 = k.mul(&pw(&g, 4)).add(&f1c);
    let f3_12 = pw(&f1, 3).mul(&pw(&lt3, 4));
    let a1 = f1.mul(&lt3);
    let gg = dv(&c5.mul(&pw(&g, 16)).mul(&pw(&g.twist(-1), 16)), &k);
    let a2 = f1.mul(&gg.add(&f1c.mul(&pw(&lt3, 4))));
    let lt15 = pw(&lt3, 5).add(&dv(&a2, &f1));
    for (n, f) in [("g", g), ("F_1", f1), ("F_<3", lt3), ("F_3,12", f3_12), ("A_1", a1), ("A_2", a2), ("F_<15", lt15)] {
        b.put(n, f);
    }
}

fn case_iv(b: &mut Builder, displays: &BTreeMap<String, FFunction>) {
    let f1 = displays["F_1"].clone();
    let lt1 = displays["F_<1"].clone();
    // F_<1^(1) = g^(1) (F_<1 + F_1)
    let g = dv(&lt1.twist(1), &lt1.add(&f1)).twist(-1);
    let f12 = f1.mul(&pw(&lt1, 2));
    let f3 = pw(&f1, 2).mul(&lt1).add(&pw(&f1, 3));
    for (n, f) in [("g", g), ("F_12", f12), ("F_3", f3)] {
        b.put(n, f);
    }
}

fn load_displays(curve: Curve) -> Result<BTreeMap<String, FFunction>> {
    let mut out = BTreeMap::new();
    for path in data::shipped_files(&format!("ffunctions/{}/", curve.id.name())) {
        let file = ff_parse(&data::read_data_file(path)?)?;
        if file.curve != curve {
            return Err(Error::Data(format!("{path} declares {}", file.curve.id)));
        }
        out.insert(file.name, file.function);
    }
    Ok(out)
}

fn build(curve: Curve) -> Result<FunctionLibrary> {
    let displays = load_displays(curve)?;
    let mut b = Builder { curve, f: BTreeMap::new() };
    match curve.id {
        CurveId::CaseI => case_i(&mut b),
        CurveId::CaseII => case_ii(&mut b),
        CurveId::CaseIII => case_iii(&mut b),
        CurveId::CaseIV => case_iv(&mut b, &displays),
        _ => return Err(Error::Unsupported(format!("no F-functions for {}", curve.id))),
    }
    Ok(FunctionLibrary { curve, formulas: b.f, displays })
}

/// The library of a curve, built once per process.
pub fn builtin_ffunctions(curve: Curve) -> Result<Arc<FunctionLibrary>> {
    static LIBS: OnceLock<Mutex<HashMap<Curve, Arc<FunctionLibrary>>>> = OnceLock::new();
    let map = LIBS.get_or_init(Default::default);
    if let Some(l) = map.lock().unwrap().get(&curve) {
        return Ok(l.clone());
    }
    let lib = Arc::new(build(curve)?);
    map.lock().unwrap().insert(curve, lib.clone());
    Ok(lib)
}

/// One built-in function by name.
pub fn ffunction(curve: Curve, name: &str) -> Result<FFunction> {
    builtin_ffunctions(curve)?.get(name).cloned()
}

/// `l_d = g(1) g(2) ... g(d)`, so that `l_d S_d(1) = F_1(d)`.
pub fn ell_coefficient(curve: Curve, d: u32) -> Result<KElem> {
    let lib = builtin_ffunctions(curve)?;
    let mut acc = KElem::one(curve);
    for i in 1..=d {
        acc = acc.mul(&lib.g().specialize(i)?);
    }
    Ok(acc)
}
