//! Plain-text cache of the monomial initial ideals of a Gale diagram.
//!
//! ```text
//! gkz-fan-cache 1
//! diagram 1 2 -1 1 -1 -1 1 -1 0 -1
//! cones 9
//! sha256 <hex digest of every line below this one>
//!
//! witness 3 -1 0 2 1
//! rays 1 0 0 1
//! 0 1 1 0 0
//! 2 0 0 0 1
//!
//! witness ...
//! ```
//!
//! Each record is a witness weight, the two boundary rays in reduced-weight
//! coordinates, and the minimal generators one per line. Records are
//! separated by blank lines. Loading re-derives each basis from its witness
//! and rejects the file unless the ideal is reproduced.

use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use super::binomial::MonomialIdeal;
use super::fan::{groebner_fan_monomial_initial_ideals, FanCone};
use super::groebner::{groebner_basis, initial_ideal, lattice_ideal_generators};
use super::order::TermOrder;
use crate::error::{Error, Result};
use crate::exact::GaleDiagram;

const MAGIC: &str = "gkz-fan-cache";
const VERSION: u32 = 1;

fn join(v: impl IntoIterator<Item = i64>) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn diagram_line(b: &GaleDiagram) -> String {
    format!("diagram {}", join(b.rows().iter().flat_map(|r| r.iter().copied())))
}

pub fn serialize(b: &GaleDiagram, cones: &[FanCone]) -> String {
    let mut body = String::new();
    for c in cones {
        body.push('\n');
        body.push_str(&format!("witness {}\n", join(c.witness.iter().copied())));
        body.push_str(&format!(
            "rays {}\n",
            join(c.rays.iter().flat_map(|r| r.iter().copied()))
        ));
        for g in c.ideal.generators() {
            body.push_str(&join(g.iter().copied()));
            body.push('\n');
        }
    }
    let digest = hex::encode(Sha256::digest(body.as_bytes()));
    format!(
        "{MAGIC} {VERSION}\n{}\ncones {}\nsha256 {digest}\n{body}",
        diagram_line(b),
        cones.len()
    )
}

fn bad(msg: impl Into<String>) -> Error {
    Error::CacheIntegrity(msg.into())
}

fn ints(s: &str, want: usize) -> Result<Vec<i64>> {
    let v: Vec<i64> = s
        .split_whitespace()
        .map(|t| t.parse::<i64>().map_err(|_| bad(format!("not an integer: {t:?}"))))
        .collect::<Result<_>>()?;
    if v.len() != want {
        return Err(bad(format!("expected {want} integers, found {}", v.len())));
    }
    Ok(v)
}

/// Parse and validate a cache for the given diagram.
pub fn parse(text: &str, b: &GaleDiagram) -> Result<Vec<FanCone>> {
    let n = b.n();
    let mut lines = text.splitn(5, '\n');
    let header = lines.next().unwrap_or_default();
    if header != format!("{MAGIC} {VERSION}") {
        return Err(bad(format!("unrecognized header {header:?}")));
    }
    let diag = lines.next().unwrap_or_default();
    if diag != diagram_line(b) {
        return Err(bad("cache belongs to a different Gale diagram"));
    }
    let count: usize = lines
        .next()
        .and_then(|l| l.strip_prefix("cones "))
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad("missing cone count"))?;
    let digest = lines
        .next()
        .and_then(|l| l.strip_prefix("sha256 "))
        .ok_or_else(|| bad("missing checksum"))?;
    let body = lines.next().unwrap_or_default();
    if hex::encode(Sha256::digest(body.as_bytes())) != digest {
        return Err(bad("checksum mismatch"));
    }

    let gens = lattice_ideal_generators(b);
    let mut cones = Vec::new();
    for record in body.split("\n\n").map(str::trim).filter(|r| !r.is_empty()) {
        let mut rl = record.lines();
        let witness = rl
            .next()
            .and_then(|l| l.strip_prefix("witness "))
            .ok_or_else(|| bad("record without witness"))
            .and_then(|s| ints(s, n))?;
        let r = rl
            .next()
            .and_then(|l| l.strip_prefix("rays "))
            .ok_or_else(|| bad("record without rays"))
            .and_then(|s| ints(s, 4))?;
        let g: Vec<Vec<i64>> = rl.map(|l| ints(l, n)).collect::<Result<_>>()?;
        if g.iter().flatten().any(|&x| x < 0) {
            return Err(bad("negative exponent"));
        }
        let ideal = MonomialIdeal::new(n, g.clone());
        if ideal.generators() != g.as_slice() {
            return Err(bad("generators are not minimal and sorted"));
        }
        let basis = groebner_basis(&gens, &TermOrder::new(vec![witness.clone()]));
        let reproduced = initial_ideal(&basis, &witness).ok().and_then(|i| i.monomial_ideal());
        if reproduced.as_ref() != Some(&ideal) {
            return Err(bad("witness weight does not reproduce the stored ideal"));
        }
        cones.push(FanCone {
            ideal,
            witness,
            basis,
            rays: [[r[0], r[1]], [r[2], r[3]]],
        });
    }
    if cones.len() != count {
        return Err(bad(format!("expected {count} records, found {}", cones.len())));
    }
    Ok(cones)
}

/// Read the cache if `path` exists, else enumerate and write it.
pub fn fan_with_cache(b: &GaleDiagram, path: Option<&Path>) -> Result<Vec<FanCone>> {
    let Some(path) = path else {
        return Ok(groebner_fan_monomial_initial_ideals(b));
    };
    if path.exists() {
        let text = fs::read_to_string(path)?;
        return parse(&text, b);
    }
    let cones = groebner_fan_monomial_initial_ideals(b);
    fs::write(path, serialize(b, &cones))?;
    Ok(cones)
}
