use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{ElementMap, FiniteSemigroup};
use crate::construct::{group_solution, monoid_idempotent_solution, ConstructError, GroupConstructionData, MonoidConstructionData};
use crate::pentagon::PentagonSolution;

use super::{Line, ParseError, ParseErrorKind, Reader};

/// Construction data as read from a file, before any hypothesis is checked.
///
/// ```text
/// kind group              kind monoid
/// normal-subgroup 0 2     mu
/// representatives 0 1     0 -> 0
/// mu                      ...
/// 0 -> 0                  theta 0
/// ...                     0 -> 0
///                         ...
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionSpec {
    Group { normal_subgroup: Vec<usize>, representatives: Vec<usize>, mu: Vec<usize> },
    Monoid { mu: Vec<usize>, thetas: BTreeMap<usize, Vec<usize>> },
}

impl ConstructionSpec {
    pub fn from_group_data(data: &GroupConstructionData) -> Self {
        ConstructionSpec::Group {
            normal_subgroup: data.normal_subgroup().to_vec(),
            representatives: data.representatives().to_vec(),
            mu: data.mu().table().to_vec(),
        }
    }

    pub fn from_monoid_data(data: &MonoidConstructionData) -> Self {
        let thetas = data
            .mu()
            .image()
            .into_iter()
            .map(|e| (e, data.theta(e).expect("every image point has a map").table().to_vec()))
            .collect();
        ConstructionSpec::Monoid { mu: data.mu().table().to_vec(), thetas }
    }

    /// Validates the data against `s` and builds the solution.
    pub fn build(&self, s: &FiniteSemigroup) -> Result<PentagonSolution, ConstructError> {
        match self {
            ConstructionSpec::Group { normal_subgroup, representatives, mu } => {
                let mu = ElementMap::on(s, mu.clone())?;
                group_solution(&GroupConstructionData::new(s.clone(), normal_subgroup, representatives, mu)?)
            }
            ConstructionSpec::Monoid { mu, thetas } => {
                let mu = ElementMap::on(s, mu.clone())?;
                let thetas = thetas
                    .iter()
                    .map(|(&e, t)| Ok((e, ElementMap::on(s, t.clone())?)))
                    .collect::<Result<_, ConstructError>>()?;
                monoid_idempotent_solution(&MonoidConstructionData::new(s.clone(), mu, thetas)?)
            }
        }
    }
}

pub fn write_construction(spec: &ConstructionSpec) -> String {
    let mut out = String::new();
    let list = |v: &[usize]| v.iter().map(|x| format!(" {x}")).collect::<String>();
    match spec {
        ConstructionSpec::Group { normal_subgroup, representatives, mu } => {
            out.push_str("kind group\n");
            let _ = writeln!(out, "normal-subgroup{}", list(normal_subgroup));
            let _ = writeln!(out, "representatives{}", list(representatives));
            out.push_str("mu\n");
            write_map(&mut out, mu);
        }
        ConstructionSpec::Monoid { mu, thetas } => {
            out.push_str("kind monoid\nmu\n");
            write_map(&mut out, mu);
            for (e, t) in thetas {
                let _ = writeln!(out, "theta {e}");
                write_map(&mut out, t);
            }
        }
    }
    out
}

fn write_map(out: &mut String, map: &[usize]) {
    for (x, y) in map.iter().enumerate() {
        let _ = writeln!(out, "{x} -> {y}");
    }
}

/// Reads construction data for a semigroup of order `n`. Only the shape is
/// checked here; [`ConstructionSpec::build`] checks the hypotheses.
pub fn parse_construction(text: &str, n: usize) -> Result<ConstructionSpec, ParseError> {
    let mut r = Reader::new(text);
    let kind = r.next_line("`kind group` or `kind monoid`")?;
    kind.expect_keyword("kind")?;
    kind.expect_len(2, "`group` or `monoid`")?;
    let spec = match kind.word(1) {
        "group" => {
            let normal_subgroup = subset(&r.next_line("`normal-subgroup`")?, "normal-subgroup", n)?;
            let representatives = subset(&r.next_line("`representatives`")?, "representatives", n)?;
            let header = r.next_line("`mu`")?;
            header.expect_keyword("mu")?;
            header.expect_len(1, "end of line")?;
            let mu = map_section(&mut r, &header, "mu", n)?;
            ConstructionSpec::Group { normal_subgroup, representatives, mu }
        }
        "monoid" => {
            let header = r.next_line("`mu`")?;
            header.expect_keyword("mu")?;
            header.expect_len(1, "end of line")?;
            let mu = map_section(&mut r, &header, "mu", n)?;
            let mut thetas = BTreeMap::new();
            while r.peek().is_some() {
                let header = r.next_line("`theta <element>`")?;
                header.expect_keyword("theta")?;
                header.expect_len(2, "an element")?;
                let e = header.element(1, n, || "theta index".to_string())?;
                let map = map_section(&mut r, &header, &format!("θ_{e}"), n)?;
                if thetas.insert(e, map).is_some() {
                    return Err(header.at(1, ParseErrorKind::Duplicate(format!("θ_{e}"))));
                }
            }
            ConstructionSpec::Monoid { mu, thetas }
        }
        other => {
            return Err(kind.at(1, ParseErrorKind::Unexpected { expected: "`group` or `monoid`", found: other.to_string() }))
        }
    };
    r.finish()?;
    Ok(spec)
}

fn subset(line: &Line<'_>, keyword: &'static str, n: usize) -> Result<Vec<usize>, ParseError> {
    line.expect_keyword(keyword)?;
    (1..line.tokens.len()).map(|i| line.element(i, n, || format!("{keyword} element"))).collect()
}

/// Lines `x -> y` following `header`, one per element, in any order.
fn map_section(r: &mut Reader<'_>, header: &Line<'_>, name: &str, n: usize) -> Result<Vec<usize>, ParseError> {
    let mut map = vec![None; n];
    while let Some(line) = r.peek() {
        if line.tokens.get(1).map(|t| t.text) != Some("->") {
            break;
        }
        let line = r.next_line("a map line")?;
        line.expect_len(3, "`x -> y`")?;
        let x = line.element(0, n, || format!("argument of {name}"))?;
        let y = line.element(2, n, || format!("{name}({x})"))?;
        if map[x].replace(y).is_some() {
            return Err(line.at(0, ParseErrorKind::Duplicate(format!("{name}({x})"))));
        }
    }
    map.iter()
        .enumerate()
        .map(|(x, y)| y.ok_or_else(|| header.error(1, ParseErrorKind::Missing(format!("{name}({x})")))))
        .collect()
}
