use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use powerlap::closed_form::{
    count_order2_z2r4s, count_order4_z2r4s, degree_class_counts_z2r4s, is_flower_zpmn, is_planar_power_graph_abelian,
    is_power_graph_complete, laplacian_spectrum_z2r4s, laplacian_spectrum_zpmn, z2r4s_terms, zpmn_terms,
    EigenvalueTerm, TermSource, ZpmnParams,
};
use powerlap::expr::{power_graph_expr_z2r4s, power_graph_expr_zpmn};
use powerlap::group::MAX_DESCRIPTOR_RANK;
use powerlap::oracle::brute_spectrum;
use powerlap::verify::{verify_groups, Status};
use powerlap::{build_power_graph, parse_descriptor, Caps, Error, GraphExpr, GroupSpec, Spectrum, VerifyOptions};

use crate::params::Grid;
use crate::render::{latex_group, latex_math, latex_text, Output};

/// How a command ended, mapped to the process exit code by `main`.
#[derive(Debug)]
pub enum Failure {
    /// Bad input or nothing applicable: exit 2.
    Usage(String),
    /// A check ran and did not pass: exit 1, after printing the output.
    Check(Box<Output>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

impl std::fmt::Debug for Output {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Output")
            .field("json", &self.json)
            .finish_non_exhaustive()
    }
}

pub type CmdResult = Result<Output, Failure>;

#[derive(Debug, Clone)]
pub enum Target {
    Group(String),
    Pmn(u64, u32, u32),
    Rs(u32, u32),
}

fn pmn_params(p: u64, m: u32, n: u32) -> Result<ZpmnParams, Failure> {
    Ok(ZpmnParams::new(p, m, n)?)
}

fn check_rank(rank: u64) -> Result<(), Failure> {
    if rank > MAX_DESCRIPTOR_RANK {
        return Err(Failure::Usage(format!("rank {rank} exceeds {MAX_DESCRIPTOR_RANK}")));
    }
    Ok(())
}

fn rs_checked(s: u32) -> Result<(), Failure> {
    if s == 0 {
        return Err(Failure::Usage("s must be at least 1".into()));
    }
    Ok(())
}

impl Target {
    fn group(&self) -> Result<GroupSpec, Failure> {
        match *self {
            Target::Group(ref text) => Ok(parse_descriptor(text)?),
            Target::Pmn(p, m, n) => {
                pmn_params(p, m, n)?;
                check_rank(n as u64)?;
                Ok(GroupSpec::homocyclic(p, m, n)?)
            }
            Target::Rs(r, s) => {
                rs_checked(s)?;
                check_rank(r as u64 + s as u64)?;
                Ok(GroupSpec::two_four(r, s)?)
            }
        }
    }
}

fn power_name(base: &BigUint, e: u64) -> String {
    if e == 1 {
        format!("Z{base}")
    } else {
        format!("Z{base}^{e}")
    }
}

/// Descriptor-style name, built without materializing the factor list.
pub fn pmn_name(p: u64, m: u32, n: u32) -> String {
    power_name(&powerlap::arith::big_pow(p, m as u64), n as u64)
}

pub fn rs_name(r: u32, s: u32) -> String {
    let four = power_name(&BigUint::from(4u32), s as u64);
    if r == 0 {
        four
    } else {
        format!("{} x {four}", power_name(&BigUint::from(2u32), r as u64))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DroppedTerm {
    pub eigenvalue: String,
    pub source: TermSource,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumRow {
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<String>,
    pub order: String,
    pub route: &'static str,
    pub vertices: String,
    pub edges: String,
    pub spectrum: Spectrum,
    pub dropped: Vec<DroppedTerm>,
}

fn dropped(terms: &[EigenvalueTerm]) -> Vec<DroppedTerm> {
    terms
        .iter()
        .filter(|t| t.multiplicity == BigUint::ZERO)
        .map(|t| DroppedTerm {
            eigenvalue: t.eigenvalue.to_string(),
            source: t.source,
        })
        .collect()
}

fn row(
    group: String,
    params: Option<String>,
    route: &'static str,
    spectrum: Spectrum,
    dropped: Vec<DroppedTerm>,
) -> SpectrumRow {
    let order = spectrum.total_multiplicity();
    // Sum of Laplacian eigenvalues = sum of degrees = 2|E|.
    let edges = spectrum.trace() / 2u32;
    SpectrumRow {
        group,
        params,
        order: order.to_string(),
        route,
        vertices: order.to_string(),
        edges: edges.to_string(),
        spectrum,
        dropped,
    }
}

fn pmn_row(p: u64, m: u32, n: u32) -> Result<SpectrumRow, Failure> {
    let params = pmn_params(p, m, n)?;
    Ok(row(
        pmn_name(p, m, n),
        Some(format!("p={p},m={m},n={n}")),
        "closed_form_pmn",
        laplacian_spectrum_zpmn(&params),
        dropped(&zpmn_terms(&params)),
    ))
}

fn rs_row(r: u32, s: u32) -> Result<SpectrumRow, Failure> {
    rs_checked(s)?;
    Ok(row(
        rs_name(r, s),
        Some(format!("r={r},s={s}")),
        "closed_form_rs",
        laplacian_spectrum_z2r4s(r, s)?,
        dropped(&z2r4s_terms(r, s)?),
    ))
}

fn group_row(group: &GroupSpec, caps: Caps) -> Result<SpectrumRow, Failure> {
    if let Some((p, m, n)) = group.homocyclic_params() {
        let mut r = pmn_row(p, m, n)?;
        r.group = group.to_string();
        return Ok(r);
    }
    if let Some((r, s)) = group.two_four_params() {
        let mut row = rs_row(r, s)?;
        row.group = group.to_string();
        return Ok(row);
    }
    let cap = caps.oracle.min(caps.enumeration);
    if group.order_within(cap).is_err() {
        return Err(Failure::Usage(format!(
            "{group} is in neither closed-form family and its order {} exceeds the oracle cap {cap}",
            group.order()
        )));
    }
    Ok(row(
        group.to_string(),
        None,
        "oracle",
        brute_spectrum(group, cap)?,
        Vec::new(),
    ))
}

fn spectrum_output(rows: &[SpectrumRow], json: &impl Serialize) -> Output {
    let mut out = Output::new(json, vec!["group", "order", "route", "edges", "spectrum", "dropped"]);
    for r in rows {
        let dropped: Vec<String> = r
            .dropped
            .iter()
            .map(|d| format!("{}:{}", d.eigenvalue, source_tag(d.source)))
            .collect();
        let cells = vec![
            r.group.clone(),
            r.order.clone(),
            r.route.to_string(),
            r.edges.clone(),
            r.spectrum.to_compact(),
            dropped.join(" "),
        ];
        let latex = vec![
            latex_group(&r.group),
            latex_math(&r.order),
            latex_text(r.route),
            latex_math(&r.edges),
            latex_math(&r.spectrum.to_latex()),
            latex_text(&dropped.join(" ")),
        ];
        out.row(cells, latex);
    }
    out
}

fn source_tag(source: TermSource) -> String {
    match serde_json::to_value(source).expect("term source") {
        serde_json::Value::String(s) => s,
        serde_json::Value::Object(map) => map.iter().map(|(k, v)| format!("{k}_{v}")).collect::<Vec<_>>().join(""),
        other => other.to_string(),
    }
}

pub fn spectrum(target: &Target, caps: Caps) -> CmdResult {
    let row = match *target {
        Target::Pmn(p, m, n) => pmn_row(p, m, n)?,
        Target::Rs(r, s) => rs_row(r, s)?,
        Target::Group(_) => group_row(&target.group()?, caps)?,
    };
    let mut out = spectrum_output(std::slice::from_ref(&row), &row);
    let dropped = if row.dropped.is_empty() {
        "none".to_string()
    } else {
        out.rows[0].cells[5].clone()
    };
    out.plain = Some(format!(
        "group: {}\norder: {}\nroute: {}\nvertices: {}\nedges: {}\nspectrum: {}\ndropped: {dropped}\n",
        row.group, row.order, row.route, row.vertices, row.edges, row.spectrum
    ));
    Ok(out)
}

#[derive(Serialize)]
struct StructureOut {
    group: String,
    expression: String,
    vertices: String,
    edges: String,
}

pub fn structure(target: &Target) -> CmdResult {
    let (group, expr): (String, GraphExpr) = match *target {
        Target::Pmn(p, m, n) => {
            pmn_params(p, m, n)?;
            (pmn_name(p, m, n), power_graph_expr_zpmn(p, m, n)?)
        }
        Target::Rs(r, s) => {
            rs_checked(s)?;
            (rs_name(r, s), power_graph_expr_z2r4s(r, s)?)
        }
        Target::Group(_) => return Err(Failure::Usage("structure takes --pmn or --rs".into())),
    };
    let s = StructureOut {
        group,
        expression: expr.to_string(),
        vertices: expr.vertex_count().to_string(),
        edges: expr.edge_count().to_string(),
    };
    let mut out = Output::new(&s, vec!["group", "expression", "vertices", "edges"]);
    out.row(
        vec![
            s.group.clone(),
            s.expression.clone(),
            s.vertices.clone(),
            s.edges.clone(),
        ],
        vec![
            latex_group(&s.group),
            latex_math(&s.expression),
            latex_math(&s.vertices),
            latex_math(&s.edges),
        ],
    );
    out.plain = Some(format!("{}\n", s.expression));
    Ok(out)
}

#[derive(Debug, Clone)]
pub enum VerifySet {
    One(Target),
    AllPmn(String),
    AllRs(String),
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
    inconclusive: usize,
}

pub fn verify(set: &VerifySet, caps: Caps, timing: bool) -> CmdResult {
    let groups: Vec<GroupSpec> = match set {
        VerifySet::One(t) => vec![t.group()?],
        VerifySet::AllPmn(spec) => Grid::parse(spec, &["p", "m", "n"])?
            .pmn()?
            .into_iter()
            .map(|(p, m, n)| Target::Pmn(p, m, n).group())
            .collect::<Result<_, _>>()?,
        VerifySet::AllRs(spec) => Grid::parse(spec, &["r", "s"])?
            .rs()?
            .into_iter()
            .map(|(r, s)| Target::Rs(r, s).group())
            .collect::<Result<_, _>>()?,
    };
    let reports = verify_groups(&groups, &VerifyOptions { caps, timing });
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let summary = Summary {
        total: reports.len(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        inconclusive: count(Status::Inconclusive),
    };
    let all_pass = summary.passed == summary.total;
    let json = serde_json::json!({ "reports": reports, "summary": summary });
    let mut out = Output::new(
        &json,
        vec![
            "group",
            "order",
            "status",
            "routes",
            "spectrum",
            "mismatches",
            "deviations",
        ],
    );
    for r in &reports {
        let status = serde_json::to_value(r.status).expect("status");
        let status = status.as_str().unwrap_or_default().to_string();
        let routes: Vec<String> = r
            .spectra
            .iter()
            .map(|s| {
                serde_json::to_value(s.route)
                    .expect("route")
                    .as_str()
                    .unwrap_or_default()
                    .to_string()
            })
            .collect();
        let spectrum = r.consensus().map(Spectrum::to_compact).unwrap_or_default();
        let cells = vec![
            r.group.clone(),
            r.order.clone(),
            status,
            routes.join(" "),
            spectrum,
            r.mismatches.len().to_string(),
            r.deviations.len().to_string(),
        ];
        let mut latex: Vec<String> = cells.iter().map(|c| latex_text(c)).collect();
        latex[0] = latex_group(&r.group);
        latex[4] = r.consensus().map(|s| latex_math(&s.to_latex())).unwrap_or_default();
        out.row(cells, latex);
    }
    if all_pass {
        Ok(out)
    } else {
        Err(Failure::Check(Box::new(out)))
    }
}

fn flag(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

/// The closed-form spectrum for family members, otherwise the oracle result
/// within the caps. `None` when nothing applies.
fn known_spectrum(group: &GroupSpec, caps: Caps) -> Result<Option<Result<Spectrum, Error>>, Failure> {
    if group.homocyclic_params().is_some() || group.two_four_params().is_some() {
        return Ok(Some(Ok(group_row(group, caps)?.spectrum)));
    }
    let cap = caps.oracle.min(caps.enumeration);
    Ok(group.order_within(cap).ok().map(|_| brute_spectrum(group, cap)))
}

#[derive(Serialize)]
struct ClassifyOut {
    group: String,
    complete: &'static str,
    planar: &'static str,
    flower: &'static str,
    laplacian_integral: &'static str,
    spectrum_containment: &'static str,
}

pub fn classify(target: &Target, caps: Caps) -> CmdResult {
    let group = target.group()?;
    let flower = group
        .homocyclic_params()
        .map(|(p, m, n)| pmn_params(p, m, n).map(|params| is_flower_zpmn(&params)))
        .transpose()?;
    let spectrum = known_spectrum(&group, caps)?;
    let integral = match &spectrum {
        Some(Ok(_)) => Some(true),
        Some(Err(Error::NonIntegralSpectrum { .. })) => Some(false),
        Some(Err(e)) => return Err(Failure::Usage(e.to_string())),
        None => None,
    };
    let containment = match &spectrum {
        Some(Ok(s)) => Some(group.exponent_divisors().iter().all(|o| s.contains(o))),
        _ => None,
    };
    let c = ClassifyOut {
        group: group.to_string(),
        complete: flag(Some(is_power_graph_complete(&group))),
        planar: flag(Some(is_planar_power_graph_abelian(&group))),
        flower: flag(flower),
        laplacian_integral: flag(integral),
        spectrum_containment: flag(containment),
    };
    let mut out = Output::new(
        &c,
        vec![
            "group",
            "complete",
            "planar",
            "flower",
            "laplacian_integral",
            "spectrum_containment",
        ],
    );
    let cells: Vec<String> = [
        c.group.as_str(),
        c.complete,
        c.planar,
        c.flower,
        c.laplacian_integral,
        c.spectrum_containment,
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let mut latex: Vec<String> = cells.iter().map(|s| latex_text(s)).collect();
    latex[0] = latex_group(&c.group);
    out.row(cells, latex);
    out.plain = Some(format!(
        "group: {}\ncomplete: {}\nplanar: {}\nflower: {}\nlaplacian_integral: {}\nspectrum_containment: {}\n",
        c.group, c.complete, c.planar, c.flower, c.laplacian_integral, c.spectrum_containment
    ));
    Ok(out)
}

#[derive(Serialize)]
struct CountRow {
    quantity: &'static str,
    formula: String,
    enumerated: Option<String>,
    matched: Option<bool>,
}

#[derive(Serialize)]
struct CountsOut {
    group: String,
    rows: Vec<CountRow>,
    all_matched: Option<bool>,
}

/// Order-2 count, order-4 count, and order-2 elements of degree 1 and of
/// degree `2^(r+s) + 1`, by walking the group and its power graph.
fn enumerate_counts(r: u32, s: u32, cap: usize) -> Result<[usize; 4], Failure> {
    let group = GroupSpec::two_four(r, s)?;
    let graph = build_power_graph(&group, cap)?;
    let (two, four) = (BigUint::from(2u32), BigUint::from(4u32));
    let big = (1usize << (r + s)) + 1;
    let mut counts = [0usize; 4];
    for (i, e) in group.elements().enumerate() {
        let order = group.element_order(&e)?;
        if order == four {
            counts[1] += 1;
        }
        if order == two {
            counts[0] += 1;
            match graph.degree(i)? {
                1 => counts[2] += 1,
                d if d == big => counts[3] += 1,
                _ => {}
            }
        }
    }
    Ok(counts)
}

pub fn counts(r: u32, s: u32, caps: Caps) -> CmdResult {
    rs_checked(s)?;
    let (deg1, deg_big) = degree_class_counts_z2r4s(r, s)?;
    let formulas = [count_order2_z2r4s(r, s)?, count_order4_z2r4s(r, s)?, deg1, deg_big];
    let names = ["order2", "order4", "deg1", "degBig"];
    let order = BigUint::from(1u32) << (r as u64 + 2 * s as u64);
    let enumerated = if order <= BigUint::from(caps.enumeration) {
        Some(enumerate_counts(r, s, caps.enumeration)?)
    } else {
        None
    };
    let rows: Vec<CountRow> = names
        .iter()
        .zip(&formulas)
        .enumerate()
        .map(|(i, (name, f))| {
            let e = enumerated.map(|c| c[i]);
            CountRow {
                quantity: name,
                formula: f.to_string(),
                enumerated: e.map(|v| v.to_string()),
                matched: e.map(|v| BigUint::from(v) == *f),
            }
        })
        .collect();
    let all_matched = enumerated.map(|_| rows.iter().all(|r| r.matched == Some(true)));
    let c = CountsOut {
        group: rs_name(r, s),
        rows,
        all_matched,
    };
    let mut out = Output::new(&c, vec!["quantity", "formula", "enumerated", "matched"]);
    for r in &c.rows {
        out.text_row(vec![
            r.quantity.to_string(),
            r.formula.clone(),
            r.enumerated.clone().unwrap_or_else(|| "n/a".into()),
            flag(r.matched).to_string(),
        ]);
    }
    if all_matched == Some(false) {
        Err(Failure::Check(Box::new(out)))
    } else {
        Ok(out)
    }
}

#[derive(Debug, Clone, Default)]
pub struct TableSpec {
    pub pmn: Vec<(u64, u32, u32)>,
    pub pmn_grid: Option<String>,
    pub rs: Vec<(u32, u32)>,
    pub rs_grid: Option<String>,
}

#[derive(Serialize)]
struct TableOut<'a> {
    rows: &'a [SpectrumRow],
}

enum Job {
    Pmn(u64, u32, u32),
    Rs(u32, u32),
}

pub fn table(spec: &TableSpec) -> CmdResult {
    let mut jobs: Vec<Job> = spec.pmn.iter().map(|&(p, m, n)| Job::Pmn(p, m, n)).collect();
    if let Some(g) = &spec.pmn_grid {
        jobs.extend(
            Grid::parse(g, &["p", "m", "n"])?
                .pmn()?
                .into_iter()
                .map(|(p, m, n)| Job::Pmn(p, m, n)),
        );
    }
    jobs.extend(spec.rs.iter().map(|&(r, s)| Job::Rs(r, s)));
    if let Some(g) = &spec.rs_grid {
        jobs.extend(
            Grid::parse(g, &["r", "s"])?
                .rs()?
                .into_iter()
                .map(|(r, s)| Job::Rs(r, s)),
        );
    }
    if jobs.is_empty() {
        return Err(Failure::Usage(
            "table needs --pmn, --pmn-grid, --rs or --rs-grid".into(),
        ));
    }
    let rows: Vec<SpectrumRow> = jobs
        .par_iter()
        .map(|job| match *job {
            Job::Pmn(p, m, n) => pmn_row(p, m, n),
            Job::Rs(r, s) => rs_row(r, s),
        })
        .collect::<Result<_, _>>()?;
    Ok(spectrum_output(&rows, &TableOut { rows: &rows }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(pmn_name(2, 3, 1), "Z8");
        assert_eq!(pmn_name(3, 1, 2), "Z3^2");
        assert_eq!(rs_name(0, 2), "Z4^2");
        assert_eq!(rs_name(1, 1), "Z2 x Z4");
        assert_eq!(rs_name(2, 3), "Z2^2 x Z4^3");
        for (r, s) in [(0, 1), (1, 1), (3, 2)] {
            assert_eq!(rs_name(r, s), GroupSpec::two_four(r, s).unwrap().to_string());
        }
        assert_eq!(pmn_name(5, 2, 3), GroupSpec::homocyclic(5, 2, 3).unwrap().to_string());
    }

    #[test]
    fn source_tags() {
        assert_eq!(source_tag(TermSource::TopPower), "top_power");
        assert_eq!(source_tag(TermSource::Power(2)), "power_2");
    }

    #[test]
    fn counts_match_for_small_groups() {
        let out = counts(2, 2, Caps::default()).unwrap();
        assert_eq!(out.json["all_matched"], true);
        assert_eq!(out.json["rows"][0]["formula"], "15");
        assert_eq!(out.json["rows"][1]["formula"], "48");
    }
}
