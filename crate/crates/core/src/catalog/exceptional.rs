//! Loader for the exceptional-type class files.

use std::str::FromStr;

use num_rational::Ratio;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::rootsys::{Family, Root, RootSystem};
use crate::TorusPoint;

use super::{ClassKind, ClosureSpecial, RawClass};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    group: String,
    label: String,
    #[serde(default)]
    aliases: Vec<String>,
    kind: ClassKind,
    #[serde(rename = "J")]
    j: Vec<usize>,
    w_factors: Vec<Vec<i64>>,
    #[serde(rename = "s_O")]
    s_o: Vec<Vec<String>>,
    #[serde(rename = "s_O_hat")]
    s_o_hat: Vec<Vec<String>>,
    normal: bool,
    closure_special: Option<ClosureSpecial>,
    #[serde(default)]
    isogeny: Vec<IsogenyRecord>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IsogenyRecord {
    tag: String,
    note: String,
    #[serde(rename = "D")]
    d: Vec<Vec<String>>,
    #[serde(rename = "T_xD")]
    t_xd: Vec<Vec<String>>,
}

fn source(rs: &RootSystem) -> &'static str {
    match rs.cartan_type().family() {
        Family::E => match rs.rank() {
            6 => include_str!("../../data/e6.json"),
            7 => include_str!("../../data/e7.json"),
            _ => include_str!("../../data/e8.json"),
        },
        Family::F => include_str!("../../data/f4.json"),
        Family::G => include_str!("../../data/g2.json"),
        _ => unreachable!("classical types are generated"),
    }
}

fn point(n: usize, v: &[String]) -> Result<TorusPoint> {
    if v.len() != n {
        return Err(Error::Data(format!("torus element {v:?} has wrong length")));
    }
    let q = v
        .iter()
        .map(|s| Ratio::<i64>::from_str(s.trim()).map_err(|e| Error::Data(format!("{s:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(TorusPoint::new(q))
}

fn points(n: usize, vs: &[Vec<String>]) -> Result<Vec<TorusPoint>> {
    vs.iter().map(|v| point(n, v)).collect()
}

pub(crate) fn classes(rs: &RootSystem) -> Result<Vec<RawClass>> {
    let records: Vec<Record> =
        serde_json::from_str(source(rs)).map_err(|e| Error::Data(e.to_string()))?;
    let n = rs.rank();
    let name = rs.cartan_type().to_string();
    records
        .into_iter()
        .map(|r| {
            if r.group != name {
                return Err(Error::Data(format!("{}: group {} in {name} file", r.label, r.group)));
            }
            let mut isogeny = Vec::new();
            for e in &r.isogeny {
                isogeny.push((e.tag.clone(), e.note.clone(), points(n, &e.d)?, points(n, &e.t_xd)?));
            }
            let mut c = RawClass::new(r.label, r.kind, r.j)
                .factors(r.w_factors.into_iter().map(Root).collect())
                .s_o(points(n, &r.s_o)?)
                .s_o_hat(points(n, &r.s_o_hat)?);
            c.aliases = r.aliases;
            c.normal = r.normal;
            c.closure_special = r.closure_special;
            c.isogeny = isogeny;
            Ok(c)
        })
        .collect()
}
