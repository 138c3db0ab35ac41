//! Command-line front end: input parsing, dispatch and rendering.
//!
//! Exit codes: 0 success, 1 failed precondition or failed verdict,
//! 2 parse, I/O or cache-integrity error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::affine::fmt_rational;
use crate::exact::{gale_normalize, integer_kernel_basis, AffineForm, Configuration, GaleDiagram, ParamVector};
use crate::hyper::arrangement::arrangement_over;
use crate::hyper::construct::{construct_exceptional, exceptional_family, is_cohen_macaulay_codim2, Construction};
use crate::hyper::fake::{fake_exponents, logfree_exponents};
use crate::hyper::nsupp::{fmt_support, negative_support};
use crate::hyper::series::{canonical_series, verify_series, SeriesCheck};
use crate::hyper::volume::{volume_by_pairs, volume_by_triangulation};
use crate::hyper::witness::verify_construction_witnesses;
use crate::hyper::Curve;
use crate::pairs::{embedded_pairs, standard_pairs, top_pair_count};
use crate::report;
use crate::toric::cache::fan_with_cache;
use crate::toric::fan::FanCone;
use crate::toric::order::unit;
use crate::toric::perturb::{generic_refinement, Refinement};
use crate::toric::GroebnerBasis;

#[derive(Parser, Debug)]
#[command(
    name = "gkz",
    version,
    about = "Exceptional parameters of codimension-2 A-hypergeometric systems"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Matrix file: "d n" then d rows of n integers, or JSON {"rows": [[..], ..]}.
    #[arg(global = true)]
    pub input: Option<PathBuf>,

    /// Seed for the generic refining weight.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Truncation radius of canonical series.
    #[arg(long = "K", global = true, default_value_t = crate::hyper::series::DEFAULT_RADIUS)]
    pub k: i64,

    /// Max-norm bound of the unimodular search (default 10·max|b_ij|).
    #[arg(long, global = true)]
    pub bound: Option<i64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Fan cache file; created when missing, verified when present.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    /// Display-only substitution `i=p/q` for the transcendental α_i.
    #[arg(long, global = true, value_parser = parse_alpha)]
    pub alpha: Vec<(usize, BigRational)>,

    /// Parameter `β` as comma-separated rationals (fake-exponents, cdd-exceptional).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub beta: Option<String>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Gale,
    IsCm,
    Volume,
    InitialIdeals,
    StandardPairs,
    FakeExponents,
    Series,
    Construct,
    Family,
    Arrangement,
    VerifyWitnesses,
    CddExceptional,
    Report,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn parse_alpha(s: &str) -> std::result::Result<(usize, BigRational), String> {
    let (i, q) = s.split_once('=').ok_or("expected i=p/q")?;
    let i: usize = i.trim().parse().map_err(|e| format!("bad index: {e}"))?;
    let q: BigRational = q.trim().parse().map_err(|e| format!("bad rational: {e}"))?;
    Ok((i, q))
}

/// Whitespace text (`d n` then `d` rows) or JSON (`[[..]]` or `{"rows": [[..]]}`).
pub fn parse_configuration(input: &str) -> Result<Configuration> {
    let t = input.trim_start();
    let rows = if t.starts_with('[') || t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
        let rows = match &v {
            Value::Object(m) => m.get("rows").or_else(|| m.get("A")).cloned().unwrap_or(Value::Null),
            other => other.clone(),
        };
        serde_json::from_value::<Vec<Vec<i64>>>(rows)
            .map_err(|e| Error::Parse(format!("expected integer rows: {e}")))?
    } else {
        let mut it = t.split_whitespace().map(|w| {
            w.replace('−', "-")
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {w:?}")))
        });
        let mut next = |what: &str| {
            it.next()
                .unwrap_or_else(|| Err(Error::Parse(format!("missing {what}"))))
        };
        let d = next("d")?;
        let n = next("n")?;
        if d <= 0 || n <= 0 {
            return Err(Error::Parse(format!("bad dimensions {d} {n}")));
        }
        let mut rows = Vec::with_capacity(d as usize);
        for r in 0..d {
            let row: Result<Vec<i64>> = (0..n).map(|c| next(&format!("entry ({}, {})", r + 1, c + 1))).collect();
            rows.push(row?);
        }
        if let Some(extra) = it.next() {
            return Err(Error::Parse(format!("trailing input after {d}×{n} matrix: {extra:?}")));
        }
        rows
    };
    Configuration::new(rows)
}

pub fn parse_beta(s: &str) -> Result<Vec<BigRational>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<BigRational>()
                .map_err(|_| Error::Parse(format!("not a rational: {x:?}")))
        })
        .collect()
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io(_) | Error::CacheIntegrity(_) | Error::InvariantViolation { .. } => 2,
        _ => 1,
    }
}

/// Rendered result of one command.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub json: Value,
    pub text: String,
    /// False when a verdict failed.
    pub ok: bool,
}

/// Column order shared by every command: normalized when the diagram meets
/// all four quadrants, the HNF kernel basis otherwise.
struct Context {
    a: Configuration,
    b: GaleDiagram,
    normalized: bool,
}

impl Context {
    fn new(original: &Configuration, bound: Option<i64>) -> Result<Self> {
        let raw = integer_kernel_basis(original)?;
        Ok(match gale_normalize(&raw, bound) {
            Ok(n) => Context {
                a: original.permuted(n.diagram.permutation()),
                b: n.diagram,
                normalized: true,
            },
            Err(Error::NormalizationImpossible) => Context {
                a: original.clone(),
                b: raw,
                normalized: false,
            },
            Err(e) => return Err(e),
        })
    }
}

struct Runner<'a> {
    cli: &'a Cli,
    original: Configuration,
    ctx: Context,
    alpha: BTreeMap<usize, BigRational>,
    warnings: Vec<String>,
}

impl<'a> Runner<'a> {
    fn fan(&self) -> Result<Vec<FanCone>> {
        fan_with_cache(&self.ctx.b, self.cli.cache.as_deref())
    }

    fn construction(&self) -> Result<Construction> {
        construct_exceptional(&self.original, self.cli.bound)
    }

    fn refinement(&self) -> Result<Refinement> {
        generic_refinement(&self.ctx.b, &unit(self.ctx.b.n(), 2, -1), self.cli.seed)
    }

    fn show(&self, v: &ParamVector) -> String {
        if self.alpha.is_empty() {
            v.to_string()
        } else {
            format!("{v} ≈ {}", v.substitute(&self.alpha))
        }
    }

    fn gale(&self) -> Result<Outcome> {
        let raw = integer_kernel_basis(&self.original)?;
        let mut text = format!("kernel basis B (rows): {:?}\n", raw.rows());
        let norm = match gale_normalize(&raw, self.cli.bound) {
            Ok(n) => {
                let _ = writeln!(
                    text,
                    "normalized B (rows): {:?}\ncolumn order: {:?}\ntransform U: {:?}",
                    n.diagram.rows(),
                    n.diagram.permutation().iter().map(|i| i + 1).collect::<Vec<_>>(),
                    n.transform
                );
                json!({"diagram": report::gale(&n.diagram), "transform": n.transform, "found_by_search": n.found_by_search})
            }
            Err(Error::NormalizationImpossible) => {
                text.push_str("no Gale diagram meets the four open quadrants\n");
                Value::Null
            }
            Err(e) => return Err(e),
        };
        Ok(Outcome {
            json: json!({"kernel": report::gale(&raw), "normalized": norm}),
            text,
            ok: true,
        })
    }

    fn is_cm(&self) -> Result<Outcome> {
        let v = is_cohen_macaulay_codim2(&self.original, self.cli.bound)?;
        let mut text = format!("{}\n", v.is_cm);
        if let (Some(u), Some(rows)) = (v.witness, v.quadrant_rows) {
            let _ = writeln!(
                text,
                "witness U = {:?}; rows {:?} of B·U lie in Q1..Q4",
                u,
                rows.iter().map(|i| i + 1).collect::<Vec<_>>()
            );
        }
        Ok(Outcome {
            json: json!({"is_cm": v.is_cm, "witness": v.witness, "quadrant_rows": v.quadrant_rows.map(|r| r.map(|i| i + 1)), "found_by_search": v.found_by_search}),
            text,
            ok: true,
        })
    }

    fn volume(&self) -> Result<Outcome> {
        let pairs = volume_by_pairs(&self.original)?;
        let tri = volume_by_triangulation(&self.original, self.cli.seed)?;
        if pairs != tri {
            return Err(Error::MethodDisagreement {
                pairs,
                triangulation: tri,
            });
        }
        Ok(Outcome {
            json: json!({"volume": pairs, "by_standard_pairs": pairs, "by_triangulation": tri}),
            text: format!("vol(A) = {pairs}\n"),
            ok: true,
        })
    }

    fn initial_ideals(&self) -> Result<Outcome> {
        let cones = self.fan()?;
        let mut text = format!("{} initial monomial ideals\n", cones.len());
        for c in &cones {
            let gens: Vec<String> = c
                .ideal
                .generators()
                .iter()
                .map(|g| crate::toric::binomial::fmt_monomial(g))
                .collect();
            let _ = writeln!(text, "w = {:?}: <{}>", c.witness, gens.join(", "));
        }
        Ok(Outcome {
            json: json!({"count": cones.len(), "column_order": self.ctx.b.permutation().iter().map(|i| i + 1).collect::<Vec<_>>(), "ideals": cones.iter().map(report::cone).collect::<Vec<_>>()}),
            text,
            ok: true,
        })
    }

    fn standard_pairs(&self) -> Result<Outcome> {
        let cones = self.fan()?;
        let d = self.ctx.a.d();
        let mut text = String::new();
        let mut out = Vec::new();
        for c in &cones {
            let pairs = standard_pairs(&c.ideal);
            let top = top_pair_count(&pairs, d);
            let emb = embedded_pairs(&pairs, d);
            let shown: Vec<String> = pairs.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                text,
                "w = {:?}: {} top, {} embedded: {}",
                c.witness,
                top,
                emb.len(),
                shown.join(" ")
            );
            out.push(json!({"witness": c.witness, "top": top, "embedded": emb.len(), "pairs": pairs.iter().map(report::pair).collect::<Vec<_>>()}));
        }
        Ok(Outcome {
            json: Value::Array(out),
            text,
            ok: true,
        })
    }

    fn beta_or_construction(&self) -> Result<(ParamVector, &'static str)> {
        match &self.cli.beta {
            Some(s) => {
                let q = parse_beta(s)?;
                if q.len() != self.ctx.a.d() {
                    return Err(Error::Parse(format!(
                        "β has {} entries, expected {}",
                        q.len(),
                        self.ctx.a.d()
                    )));
                }
                Ok((ParamVector(q.into_iter().map(AffineForm::from).collect()), "given"))
            }
            None => Ok((self.construction()?.beta, "construction")),
        }
    }

    fn fake(&self) -> Result<Outcome> {
        let (beta, source) = self.beta_or_construction()?;
        let r = self.refinement()?;
        let f = fake_exponents(&self.ctx.a, &beta, &r.ideal)?;
        let mut text = format!("β = {} ({source}); order (-e3, w), w = {:?}\n", self.show(&beta), r.w);
        let mut rows = Vec::new();
        for e in &f.exponents {
            let mns = crate::hyper::has_minimum_negative_support(&e.u, &self.ctx.b);
            let _ = writeln!(
                text,
                "{} -> u = {}, nsupp(u) = {}, mns = {}",
                e.pair,
                self.show(&e.u),
                fmt_support(&negative_support(&e.u)),
                mns
            );
            let mut j = report::fake_exponent(e);
            j["mns"] = json!(mns);
            rows.push(j);
        }
        let _ = writeln!(text, "{} pairs without a solution", f.unsolvable);
        Ok(Outcome {
            json: json!({"beta": report::param_vector(&beta), "weight": r.w, "exponents": rows, "unsolvable": f.unsolvable, "column_order": self.ctx.b.permutation().iter().map(|i| i + 1).collect::<Vec<_>>()}),
            text,
            ok: true,
        })
    }

    fn series(&self) -> Result<Outcome> {
        let c = self.construction()?;
        let r = self.refinement()?;
        let cones = self.fan()?;
        let mut bases: Vec<(String, &GroebnerBasis)> = vec![(format!("(-e3, {:?})", r.w), &r.basis)];
        bases.extend(cones.iter().map(|c| (format!("{:?}", c.witness), &c.basis)));
        let mut text = format!("β = {}; K = {}\n", self.show(&c.beta), self.cli.k);
        let mut ok = true;
        let mut out = Vec::new();
        for f in logfree_exponents(&c.normal.a, c.b(), &c.beta, &r.ideal)? {
            let phi = canonical_series(&f.u, c.b(), self.cli.k)?;
            let checks: Vec<(String, SeriesCheck)> = bases
                .iter()
                .map(|(name, gb)| (name.clone(), verify_series(&c.normal.a, c.b(), &phi, gb)))
                .collect();
            let failures: usize = checks.iter().map(|(_, s)| s.failures.len()).sum();
            let cancelled: usize = checks.iter().map(|(_, s)| s.cancelled).sum();
            let boundary: usize = checks.iter().map(|(_, s)| s.boundary.len()).sum();
            ok &= checks.iter().all(|(_, s)| s.passed());
            let _ = writeln!(
                text,
                "φ_{} [nsupp {}]: {} terms; {} cancellations exact, {} boundary, {} failures over {} Gröbner bases",
                f.u,
                fmt_support(&negative_support(&f.u)),
                phi.terms.len(),
                cancelled,
                boundary,
                failures,
                checks.len()
            );
            let near: Vec<Value> = phi
                .terms
                .iter()
                .filter(|(z, _)| z[0].abs() <= 1 && z[1].abs() <= 1)
                .map(|(z, coef)| {
                    let mut j = json!({"z": z, "coefficient": coef.to_string()});
                    if !self.alpha.is_empty() {
                        j["value"] = coef
                            .evaluate(&self.alpha)
                            .map(|q| Value::String(fmt_rational(&q)))
                            .unwrap_or(Value::Null);
                    }
                    j
                })
                .collect();
            for t in &near {
                let _ = write!(text, "    z = {}: {}", t["z"], t["coefficient"].as_str().unwrap_or(""));
                match t.get("value") {
                    Some(Value::String(v)) => {
                        let _ = writeln!(text, " ≈ {v}");
                    }
                    Some(_) => text.push_str(" (pole at the given α)\n"),
                    None => text.push('\n'),
                }
            }
            for (name, s) in &checks {
                if let Some(fl) = s.failures.first() {
                    let _ = writeln!(text, "    FAIL under {name}: {} at z = {:?}", fl.operator, fl.z);
                }
            }
            out.push(json!({
                "exponent": report::fake_exponent(&f),
                "terms": phi.terms.len(),
                "cancelled": cancelled,
                "boundary": boundary,
                "failures": failures,
                "terms_near_origin": near,
            }));
        }
        Ok(Outcome {
            json: json!({"beta": report::param_vector(&c.beta), "K": self.cli.k, "series": out, "passed": ok}),
            text,
            ok,
        })
    }

    fn construct(&self) -> Result<Outcome> {
        let c = self.construction()?;
        let order: Vec<usize> = c.normal.permutation().iter().map(|i| i + 1).collect();
        let mut text = format!(
            "column order: {order:?}\nB = {:?}\nv = {}\nβ = A·(v-e3) = {}\n",
            c.b().rows(),
            self.show(&c.v),
            self.show(&c.beta)
        );
        let labels = ["v-e3", "v-e3-B1", "v-e3-B2", "v-e3-B1-B2"];
        let mut shifted = Vec::new();
        for ((x, _), l) in c.shifted().iter().zip(labels) {
            let s = negative_support(x);
            let _ = writeln!(text, "nsupp({l}) = {}", fmt_support(&s));
            shifted.push(json!({"label": l, "vector": report::param_vector(x), "nsupp": s.iter().map(|i| i + 1).collect::<Vec<_>>()}));
        }
        Ok(Outcome {
            json: json!({"column_order": order, "gale": report::gale(c.b()), "v": report::param_vector(&c.v), "beta": report::param_vector(&c.beta), "shifted": shifted}),
            text,
            ok: true,
        })
    }

    fn family(&self) -> Result<Outcome> {
        let c = self.construction()?;
        let f = exceptional_family(&c)?;
        Ok(Outcome {
            json: report::subspace(&f),
            text: format!("{f}\n"),
            ok: true,
        })
    }

    fn arrangement(&self) -> Result<Outcome> {
        let arr = arrangement_over(&self.ctx.a, &self.fan()?);
        let label = "candidate superset of the exceptional set";
        Ok(Outcome {
            json: json!({"label": label, "components": report::arrangement(&arr)}),
            text: format!(
                "{label}: {}\n",
                if arr.is_empty() {
                    "∅".to_string()
                } else {
                    arr.to_string()
                }
            ),
            ok: true,
        })
    }

    fn witnesses(&self) -> Result<Outcome> {
        let r = verify_construction_witnesses(&self.original, self.cli.bound, self.cli.seed)?;
        let mut text = String::new();
        for (k, c) in r.checks.iter().enumerate() {
            let _ = writeln!(
                text,
                "({}) {}: {}",
                k + 1,
                c.name,
                if c.passed { "pass" } else { "FAIL" }
            );
            for d in &c.detail {
                let _ = writeln!(text, "    {d}");
            }
        }
        Ok(Outcome {
            json: json!({"pair": report::pair(&r.pair), "weight": r.refinement.w, "checks": r.checks.iter().map(report::check).collect::<Vec<_>>(), "passed": r.all_passed()}),
            text,
            ok: r.all_passed(),
        })
    }

    fn cdd(&self) -> Result<Outcome> {
        let curve = Curve::from_configuration(&self.original)?;
        if let Some(s) = &self.cli.beta {
            let q = parse_beta(s)?;
            let ints: Option<Vec<i64>> = q
                .iter()
                .map(|x| x.is_integer().then(|| x.to_integer().try_into().ok()).flatten())
                .collect();
            let beta = match ints.as_deref() {
                Some([b1, b2]) => [*b1, *b2],
                _ => return Err(Error::Parse("β must be two integers".into())),
            };
            let member = curve.is_exceptional(beta);
            return Ok(Outcome {
                json: json!({"beta": beta, "exceptional": member, "in_NA": curve.member(beta)}),
                text: format!(
                    "({},{}) {} the exceptional set\n",
                    beta[0],
                    beta[1],
                    if member { "is in" } else { "is not in" }
                ),
                ok: true,
            });
        }
        let set = curve.exceptional_set();
        Ok(Outcome {
            json: json!({"exceptional_set": set, "degree_bound": curve.degree_bound(), "is_cm": curve.is_cohen_macaulay()}),
            text: format!("E(A) = {}\n", fmt_points(&set)),
            ok: true,
        })
    }

    fn report(&self) -> Result<Outcome> {
        let mut parts: Vec<(&str, Outcome)> = vec![
            ("gale", self.gale()?),
            ("is_cm", self.is_cm()?),
            ("volume", self.volume()?),
            ("initial_ideals", self.initial_ideals()?),
            ("arrangement", self.arrangement()?),
        ];
        if self.ctx.normalized {
            parts.push(("construction", self.construct()?));
            parts.push(("family", self.family()?));
            parts.push(("witnesses", self.witnesses()?));
            parts.push(("series", self.series()?));
        }
        if self.original.d() == 2 {
            parts.push(("cdd", self.cdd()?));
        }
        let mut json = serde_json::Map::new();
        let mut text = String::new();
        let mut ok = true;
        for (name, o) in parts {
            let _ = write!(text, "== {name}\n{}", o.text);
            ok &= o.ok;
            json.insert(name.to_string(), o.json);
        }
        Ok(Outcome {
            json: Value::Object(json),
            text,
            ok,
        })
    }
}

fn fmt_points(s: &[[i64; 2]]) -> String {
    if s.is_empty() {
        return "∅".into();
    }
    let v: Vec<String> = s.iter().map(|p| format!("({},{})", p[0], p[1])).collect();
    format!("{{{}}}", v.join(", "))
}

pub fn run(cli: &Cli) -> Result<(Outcome, Vec<String>)> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| Error::Parse("missing input file".into()))?;
    let text = std::fs::read_to_string(path)?;
    let original = parse_configuration(&text)?;
    let ctx = Context::new(&original, cli.bound)?;
    let alpha: BTreeMap<usize, BigRational> = cli.alpha.iter().cloned().collect();
    let mut runner = Runner {
        cli,
        original,
        ctx,
        alpha,
        warnings: Vec::new(),
    };
    if !runner.alpha.is_empty() {
        runner.warnings.push(
            "warning: --alpha substitutes values for display only; integrality tests were done symbolically".into(),
        );
    }
    let out = match cli.command {
        Command::Gale => runner.gale(),
        Command::IsCm => runner.is_cm(),
        Command::Volume => runner.volume(),
        Command::InitialIdeals => runner.initial_ideals(),
        Command::StandardPairs => runner.standard_pairs(),
        Command::FakeExponents => runner.fake(),
        Command::Series => runner.series(),
        Command::Construct => runner.construct(),
        Command::Family => runner.family(),
        Command::Arrangement => runner.arrangement(),
        Command::VerifyWitnesses => runner.witnesses(),
        Command::CddExceptional => runner.cdd(),
        Command::Report => runner.report(),
    }?;
    Ok((out, runner.warnings))
}

/// Exit code and the text written to stdout and stderr.
pub fn execute<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                (0, rendered, String::new())
            } else {
                (2, String::new(), rendered)
            };
        }
    };
    match run(&cli) {
        Ok((o, warnings)) => {
            let stdout = match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&o.json).expect("serializable")),
                Format::Text => o.text,
            };
            let mut stderr = warnings.join("\n");
            if !stderr.is_empty() {
                stderr.push('\n');
            }
            (if o.ok { 0 } else { 1 }, stdout, stderr)
        }
        Err(e) => (exit_code(&e), String::new(), format!("error: {e}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Invariant;

    #[test]
    fn parses_text_and_json() {
        let a = parse_configuration("3 5\n1 1 1 1 1\n0 1 0 1 0\n0 0 1 1 −2\n").unwrap();
        assert_eq!(a.rows()[2], vec![0, 0, 1, 1, -2]);
        let b = parse_configuration(r#"{"rows": [[1,1,1,1,1],[0,1,0,1,0],[0,0,1,1,-2]]}"#).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn names_the_failed_invariant() {
        let e = parse_configuration("2 4\n1 1 2 1\n0 1 3 4").unwrap_err();
        assert!(matches!(
            e,
            Error::InvariantViolation {
                which: Invariant::FirstRowOnes,
                ..
            }
        ));
        let e = parse_configuration("2 3\n1 1 1\n0 1 2").unwrap_err();
        assert!(matches!(
            e,
            Error::InvariantViolation {
                which: Invariant::Codim,
                ..
            }
        ));
        assert!(matches!(parse_configuration("2 4\n1 1"), Err(Error::Parse(_))));
    }

    #[test]
    fn alpha_flag() {
        assert_eq!(parse_alpha("5=1/3").unwrap(), (5, crate::exact::affine::ratio(1, 3)));
        assert!(parse_alpha("x").is_err());
    }
}
