//! JSON renderings of exact values. Numbers never carry exact data:
//! rationals become `"p/q"` strings and affine forms
//! `{"const": "p/q", "alpha": {"5": "p/q"}}`.

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::exact::affine::fmt_rational;
use crate::exact::{AffineForm, GaleDiagram, ParamVector};
use crate::hyper::nsupp::negative_support;
use crate::hyper::{AffineSubspace, Check, FakeExponent, SubspaceArrangement};
use crate::pairs::StandardPair;
use crate::toric::binomial::{fmt_monomial, MonomialIdeal};
use crate::toric::fan::FanCone;

pub fn rational(q: &BigRational) -> Value {
    Value::String(fmt_rational(q))
}

pub fn form(f: &AffineForm) -> Value {
    let alpha: Map<String, Value> = f.coeffs().iter().map(|(k, c)| (k.to_string(), rational(c))).collect();
    json!({"const": rational(f.constant_part()), "alpha": alpha})
}

pub fn param_vector(v: &ParamVector) -> Value {
    Value::Array(v.iter().map(form).collect())
}

pub fn rationals(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn subspace(s: &AffineSubspace) -> Value {
    json!({
        "point": rationals(s.point()),
        "directions": s.directions().iter().map(|d| rationals(d)).collect::<Vec<_>>(),
        "text": s.to_string(),
    })
}

pub fn arrangement(a: &SubspaceArrangement) -> Value {
    Value::Array(a.components().iter().map(subspace).collect())
}

pub fn pair(p: &StandardPair) -> Value {
    json!({
        "eta": p.eta,
        "sigma": p.sigma.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "text": p.to_string(),
    })
}

pub fn ideal(m: &MonomialIdeal) -> Value {
    Value::Array(m.generators().iter().map(|g| Value::String(fmt_monomial(g))).collect())
}

pub fn cone(c: &FanCone) -> Value {
    json!({
        "witness": c.witness,
        "generators": ideal(&c.ideal),
        "groebner_basis": c.basis.elements().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

pub fn gale(b: &GaleDiagram) -> Value {
    json!({
        "rows": b.rows(),
        "permutation": b.permutation().iter().map(|i| i + 1).collect::<Vec<_>>(),
    })
}

pub fn fake_exponent(f: &FakeExponent) -> Value {
    json!({
        "u": param_vector(&f.u),
        "text": f.u.to_string(),
        "pair": pair(&f.pair),
        "nsupp": negative_support(&f.u).iter().map(|i| i + 1).collect::<Vec<_>>(),
    })
}

pub fn check(c: &Check) -> Value {
    json!({"name": c.name, "passed": c.passed, "detail": c.detail})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::affine::ratio;

    #[test]
    fn forms_are_strings() {
        let f = AffineForm::symbol(5).scale(&ratio(-2, 3)).add_int(1);
        assert_eq!(form(&f).to_string(), r#"{"alpha":{"5":"-2/3"},"const":"1"}"#);
    }
}
