use rayon::prelude::*;
use serde::Serialize;

use demazure::charpoly::{demazure_character, normalize_word};
use demazure::conehb::{
    cone_build, hilbert_basis, property_p_check, verify_cone_equality, ConeVector, PropertyPReport,
};
use demazure::faces::{all_faces, levi_face_check_with, FaceContext};
use demazure::polytope::{saturation_report, DemazurePolytope};
use demazure::rootdata::{parse_rat_weight, parse_weight};
use demazure::weyl::parse_word;
use demazure::{LieType, RootDatum, Weight, WeylElement, WeylGroup};

use crate::args::{
    ConeArgs, Format, GroupArgs, HilbertArgs, InstanceArgs, SaturateArgs, SegmentArgs, TableArgs, WordArgs,
};
use crate::emit::{emit, rat_vec, rat_weight_csv, weight_csv, word_str, Table};
use crate::error::{CliError, CliResult, Context};

/// Whether every mathematical check of a command passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Discrepancy,
}

impl Status {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Ok
        } else {
            Status::Discrepancy
        }
    }
}

pub fn build_group(args: &GroupArgs) -> CliResult<WeylGroup> {
    let t: LieType = args.lie_type.parse().ctx(|| "--type".into())?;
    let label = || format!("{}{}", args.lie_type, args.rank);
    let datum = RootDatum::new(t, args.rank).ctx(label)?;
    WeylGroup::generate_with_cap(&datum, args.cap_order).ctx(label)
}

pub fn parse_lambda(group: &WeylGroup, s: &str) -> CliResult<Weight> {
    let lambda = parse_weight(s).ctx(|| "--lambda".into())?;
    let ctx = || format!("lambda={lambda}");
    group.datum().check_rank(lambda.rank()).ctx(ctx)?;
    if !lambda.is_dominant() {
        return Err(CliError::Core { context: ctx(), source: demazure::Error::NotDominant(lambda.0.clone()) });
    }
    Ok(lambda)
}

/// Reduced 0-based word and its element.
pub fn resolve_word(group: &WeylGroup, args: &WordArgs) -> CliResult<(Vec<usize>, WeylElement)> {
    let ctx = || format!("word=[{}]", args.word);
    let mut word = parse_word(&args.word, group.rank()).ctx(ctx)?;
    if args.normalize_word {
        word = normalize_word(group, &word).ctx(ctx)?;
    }
    let w = group.from_reduced_word(&word).ctx(ctx)?;
    Ok((word, w))
}

fn is_conjectural(group: &WeylGroup) -> bool {
    group.datum().lie_type() == Some(LieType::E)
}

#[derive(Serialize)]
struct Header {
    #[serde(rename = "type")]
    lie_type: String,
    rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<Vec<i64>>,
    word: String,
}

fn header(group: &WeylGroup, lambda: Option<&Weight>, word: &[usize]) -> Header {
    Header {
        lie_type: group.datum().label().to_string(),
        rank: group.rank(),
        lambda: lambda.map(|l| l.0.clone()),
        word: word_str(word),
    }
}

struct Instance {
    group: WeylGroup,
    lambda: Weight,
    word: Vec<usize>,
    w: WeylElement,
}

impl Instance {
    fn new(args: &InstanceArgs) -> CliResult<Self> {
        let group = build_group(&args.group)?;
        let lambda = parse_lambda(&group, &args.lambda)?;
        let (word, w) = resolve_word(&group, &args.word)?;
        Ok(Self { group, lambda, word, w })
    }

    fn ctx(&self) -> String {
        format!("lambda={} word=[{}]", self.lambda, word_str(&self.word))
    }

    fn header(&self) -> Header {
        header(&self.group, Some(&self.lambda), &self.word)
    }
}

#[derive(Serialize)]
struct Term {
    weight: Vec<i64>,
    mult: i64,
}

#[derive(Serialize)]
struct CharReport {
    #[serde(flatten)]
    header: Header,
    dimension: i128,
    terms: Vec<Term>,
}

pub fn char_cmd(args: &InstanceArgs) -> CliResult<Status> {
    let inst = Instance::new(args)?;
    let ch = demazure_character(&inst.group, &inst.lambda, &inst.word).ctx(|| inst.ctx())?;
    let mut table = Table::new(&["weight", "mult"]);
    let mut terms = Vec::new();
    for (mu, m) in ch.iter() {
        table.push(vec![weight_csv(mu), m.to_string()]);
        terms.push(Term { weight: mu.0.clone(), mult: m });
    }
    let report = CharReport { header: inst.header(), dimension: ch.dimension(), terms };
    emit(&args.out, Format::Json, &report, table)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct InequalityRecord {
    v_word: String,
    i: usize,
    normal: Vec<String>,
    bound: String,
}

#[derive(Serialize)]
struct PolytopeReport {
    #[serde(flatten)]
    header: Header,
    vertices: Vec<Vec<String>>,
    inequalities: Vec<InequalityRecord>,
}

pub fn polytope_cmd(args: &InstanceArgs) -> CliResult<Status> {
    let inst = Instance::new(args)?;
    let g = &inst.group;
    let p = DemazurePolytope::new(g, &inst.lambda, inst.w).ctx(|| inst.ctx())?;
    let mut table = Table::new(&["kind", "v_word", "i", "coords", "bound"]);
    let vertices: Vec<Vec<String>> = p.vertices.iter().map(|v| rat_vec(&v.to_rational().0)).collect();
    for v in &vertices {
        table.push(vec!["vertex".into(), String::new(), String::new(), v.join(","), String::new()]);
    }
    let inequalities: Vec<InequalityRecord> = p
        .inequalities
        .iter()
        .map(|h| InequalityRecord {
            v_word: word_str(&g.word(h.v)),
            i: h.i + 1,
            normal: rat_vec(&h.normal.0),
            bound: h.bound.to_string(),
        })
        .collect();
    for h in &inequalities {
        table.push(vec!["inequality".into(), h.v_word.clone(), h.i.to_string(), h.normal.join(","), h.bound.clone()]);
    }
    emit(&args.out, Format::Json, &PolytopeReport { header: inst.header(), vertices, inequalities }, table)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct PointsReport {
    #[serde(flatten)]
    header: Header,
    count: usize,
    points: Vec<Vec<i64>>,
}

pub fn points_cmd(args: &InstanceArgs) -> CliResult<Status> {
    let inst = Instance::new(args)?;
    let p = DemazurePolytope::new(&inst.group, &inst.lambda, inst.w).ctx(|| inst.ctx())?;
    let pts = p.lattice_points(&inst.group).ctx(|| inst.ctx())?;
    let mut table = Table::new(&["weight"]);
    for mu in &pts {
        table.push(vec![weight_csv(mu)]);
    }
    let report = PointsReport { header: inst.header(), count: pts.len(), points: pts.into_iter().map(|m| m.0).collect() };
    emit(&args.out, Format::Json, &report, table)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct SegmentRecord {
    lower: Vec<String>,
    upper: Vec<String>,
    t_lower: String,
    t_upper: String,
    degenerate: bool,
}

#[derive(Serialize)]
struct SegmentReport {
    #[serde(flatten)]
    header: Header,
    mu: Vec<String>,
    index: usize,
    segment: Option<SegmentRecord>,
}

pub fn segment_cmd(args: &SegmentArgs) -> CliResult<Status> {
    let inst = Instance::new(&args.instance)?;
    let g = &inst.group;
    let mu = parse_rat_weight(&args.mu).ctx(|| "--mu".into())?;
    g.datum().check_rank(mu.0.len()).ctx(|| "--mu".into())?;
    if args.index == 0 || args.index > g.rank() {
        return Err(CliError::Usage(format!("--index must lie in 1..={}", g.rank())));
    }
    let p = DemazurePolytope::new(g, &inst.lambda, inst.w).ctx(|| inst.ctx())?;
    let seg = p.root_string_segment(g, &mu, args.index - 1).ctx(|| inst.ctx())?;
    let mut table = Table::new(&["endpoint", "weight", "t"]);
    if let Some(s) = &seg {
        table.push(vec!["lower".into(), rat_weight_csv(&s.lower), s.t_lower.to_string()]);
        table.push(vec!["upper".into(), rat_weight_csv(&s.upper), s.t_upper.to_string()]);
    }
    let report = SegmentReport {
        header: inst.header(),
        mu: rat_vec(&mu.0),
        index: args.index,
        segment: seg.map(|s| SegmentRecord {
            degenerate: s.is_degenerate(),
            lower: rat_vec(&s.lower.0),
            upper: rat_vec(&s.upper.0),
            t_lower: s.t_lower.to_string(),
            t_upper: s.t_upper.to_string(),
        }),
    };
    emit(&args.instance.out, Format::Json, &report, table)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct LeviRecord {
    indices: Vec<usize>,
    label: String,
    levi_word_y: String,
    levi_lambda: Vec<i64>,
}

#[derive(Serialize)]
struct FaceChecks {
    vertex_formula: bool,
    interval: bool,
    levi_vertices: bool,
    levi_lattice_points: bool,
    multiplicities: bool,
}

#[derive(Serialize)]
struct FaceRecord {
    v_word: String,
    i: usize,
    u_word: String,
    y_word: String,
    vertices: Vec<Vec<i64>>,
    levi: LeviRecord,
    checks: FaceChecks,
}

#[derive(Serialize)]
struct FacesReport {
    #[serde(flatten)]
    header: Header,
    normalized_word: String,
    failures: usize,
    faces: Vec<FaceRecord>,
}

pub fn faces_cmd(args: &InstanceArgs) -> CliResult<Status> {
    let inst = Instance::new(args)?;
    let g = &inst.group;
    let faces = all_faces(g, &inst.lambda, inst.w).ctx(|| inst.ctx())?;
    let wn = g.max_rep_mod_stabilizer(&inst.lambda, inst.w);
    let ctx = FaceContext::new(g, &inst.lambda, wn).ctx(|| inst.ctx())?;
    let mut records = Vec::new();
    let mut table = Table::new(&["v_word", "i", "u_word", "y_word", "vertices", "levi_indices", "levi_lambda", "levi_word_y", "checks"]);
    for f in &faces {
        let rep = levi_face_check_with(g, f, &ctx).ctx(|| format!("{} v=[{}] i={}", inst.ctx(), word_str(&g.word(f.v)), f.i + 1))?;
        let failures = rep.failures();
        table.push(vec![
            word_str(&g.word(f.v)),
            (f.i + 1).to_string(),
            word_str(&g.word(f.u)),
            word_str(&g.word(f.y)),
            f.vertex_weights.iter().map(|v| format!("{v}")).collect::<Vec<_>>().join(" "),
            f.levi_indices.iter().map(|k| (k + 1).to_string()).collect::<Vec<_>>().join(","),
            weight_csv(&rep.levi_lambda),
            word_str(&rep.levi_word),
            if failures.is_empty() { "ok".into() } else { failures.join(" ") },
        ]);
        records.push(FaceRecord {
            v_word: word_str(&g.word(f.v)),
            i: f.i + 1,
            u_word: word_str(&g.word(f.u)),
            y_word: word_str(&g.word(f.y)),
            vertices: f.vertex_weights.iter().map(|v| v.0.clone()).collect(),
            levi: LeviRecord {
                indices: f.levi_indices.iter().map(|k| k + 1).collect(),
                label: rep.levi_label.clone(),
                levi_word_y: word_str(&rep.levi_word),
                levi_lambda: rep.levi_lambda.0.clone(),
            },
            checks: FaceChecks {
                vertex_formula: rep.vertices_by_equality,
                interval: rep.interval,
                levi_vertices: rep.levi_vertices,
                levi_lattice_points: rep.levi_lattice_points,
                multiplicities: rep.multiplicities,
            },
        });
    }
    let failures = faces.len() - records.iter().filter(|r| all_checks(&r.checks)).count();
    let report = FacesReport { header: inst.header(), normalized_word: word_str(&g.word(wn)), failures, faces: records };
    emit(&args.out, Format::Json, &report, table)?;
    Ok(Status::from_ok(failures == 0))
}

fn all_checks(c: &FaceChecks) -> bool {
    c.vertex_formula && c.interval && c.levi_vertices && c.levi_lattice_points && c.multiplicities
}

#[derive(Serialize, Clone)]
pub struct PairRecord {
    lambda: Vec<i64>,
    mu: Vec<i64>,
}

fn pairs(v: &[ConeVector]) -> Vec<PairRecord> {
    v.iter().map(|x| PairRecord { lambda: x.lambda.0.clone(), mu: x.mu.0.clone() }).collect()
}

#[derive(Serialize)]
struct ConeEquality {
    equal: bool,
    generators_satisfy_inequalities: bool,
    inequality_cone_in_span: bool,
    facets_implied: bool,
    num_facets: usize,
}

#[derive(Serialize)]
struct ConeReport {
    #[serde(flatten)]
    header: Header,
    dimension: usize,
    generators: Vec<PairRecord>,
    rays: Vec<PairRecord>,
    inequalities: Vec<Vec<String>>,
    cone_equality: ConeEquality,
}

pub fn cone_cmd(args: &ConeArgs) -> CliResult<Status> {
    let g = build_group(&args.group)?;
    let (word, w) = resolve_word(&g, &args.word)?;
    let ctx = || format!("word=[{}]", word_str(&word));
    let cone = cone_build(&g, w).ctx(ctx)?;
    let eq = verify_cone_equality(&cone).ctx(ctx)?;
    let mut table = Table::new(&["kind", "lambda", "mu"]);
    for (kind, list) in [("generator", &cone.generators), ("ray", &cone.rays)] {
        for x in list {
            table.push(vec![kind.into(), weight_csv(&x.lambda), weight_csv(&x.mu)]);
        }
    }
    let report = ConeReport {
        header: header(&g, None, &word),
        dimension: cone.dimension(),
        generators: pairs(&cone.generators),
        rays: pairs(&cone.rays),
        inequalities: cone.inequalities.iter().map(|r| r.iter().map(i128::to_string).collect()).collect(),
        cone_equality: ConeEquality {
            equal: eq.equal(),
            generators_satisfy_inequalities: eq.generators_satisfy_inequalities,
            inequality_cone_in_span: eq.inequality_cone_in_span,
            facets_implied: eq.facets_implied,
            num_facets: eq.num_facets,
        },
    };
    emit(&args.out, Format::Json, &report, table)?;
    Ok(Status::from_ok(eq.equal()))
}

#[derive(Serialize, Clone)]
pub struct PropertyPRecord {
    holds: bool,
    non_fundamental: Vec<PairRecord>,
    missing: Vec<PairRecord>,
    extra: Vec<PairRecord>,
    zero_multiplicity: Vec<PairRecord>,
}

impl PropertyPRecord {
    fn new(rep: &PropertyPReport) -> Self {
        Self {
            holds: rep.holds(),
            non_fundamental: pairs(&rep.non_fundamental),
            missing: pairs(&rep.missing),
            extra: pairs(&rep.extra),
            zero_multiplicity: pairs(&rep.zero_multiplicity),
        }
    }

    pub fn passed(&self) -> bool {
        self.holds && self.zero_multiplicity.is_empty()
    }
}

#[derive(Serialize)]
struct HilbertReport {
    #[serde(flatten)]
    header: Header,
    conjectural: bool,
    dimension: usize,
    extremal_rays: usize,
    num_facets: usize,
    num_simplices: usize,
    cone_equal: bool,
    elements: Vec<PairRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    property_p: Option<PropertyPRecord>,
}

pub fn hilbert_cmd(args: &HilbertArgs) -> CliResult<Status> {
    if args.table {
        return table_run(&args.group, args.property_p, args.jobs, &args.out);
    }
    let g = build_group(&args.group)?;
    let (word, w) = resolve_word(&g, &args.word)?;
    let ctx = || format!("word=[{}]", word_str(&word));
    let cone = cone_build(&g, w).ctx(ctx)?;
    let eq = verify_cone_equality(&cone).ctx(ctx)?;
    let hb = hilbert_basis(&g, &cone).ctx(ctx)?;
    let property_p = if args.property_p {
        Some(PropertyPRecord::new(&property_p_check(&g, w, &hb.elements).ctx(ctx)?))
    } else {
        None
    };
    let mut table = Table::new(&["lambda", "mu"]);
    for x in &hb.elements {
        table.push(vec![weight_csv(&x.lambda), weight_csv(&x.mu)]);
    }
    let ok = eq.equal() && property_p.as_ref().is_none_or(PropertyPRecord::passed);
    let report = HilbertReport {
        header: header(&g, None, &word),
        conjectural: is_conjectural(&g),
        dimension: hb.dimension,
        extremal_rays: cone.rays.len(),
        num_facets: hb.num_facets,
        num_simplices: hb.num_simplices,
        cone_equal: eq.equal(),
        elements: pairs(&hb.elements),
        property_p,
    };
    emit(&args.out, Format::Json, &report, table)?;
    Ok(Status::from_ok(ok))
}

#[derive(Serialize)]
struct TableRow {
    word: String,
    hilbert_basis: usize,
    extremal_rays: usize,
    cone_equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    property_p: Option<bool>,
}

#[derive(Serialize)]
struct TableReport {
    #[serde(rename = "type")]
    lie_type: String,
    rank: usize,
    conjectural: bool,
    rows: Vec<TableRow>,
}

pub fn pool(jobs: Option<usize>) -> CliResult<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        if n == 0 {
            return Err(CliError::Usage("--jobs must be positive".into()));
        }
        b = b.num_threads(n);
    }
    b.build().map_err(|e| CliError::Usage(e.to_string()))
}

fn table_run(group: &GroupArgs, property_p: bool, jobs: Option<usize>, out: &crate::args::OutputArgs) -> CliResult<Status> {
    let g = build_group(group)?;
    let elems: Vec<WeylElement> = g.elements().collect();
    let rows: Vec<CliResult<TableRow>> = pool(jobs)?.install(|| {
        elems
            .par_iter()
            .map(|&w| {
                let ctx = || format!("word=[{}]", word_str(&g.word(w)));
                let cone = cone_build(&g, w).ctx(ctx)?;
                let eq = verify_cone_equality(&cone).ctx(ctx)?;
                let hb = hilbert_basis(&g, &cone).ctx(ctx)?;
                let pp = if property_p {
                    let rep = property_p_check(&g, w, &hb.elements).ctx(ctx)?;
                    Some(rep.holds() && rep.zero_multiplicity.is_empty())
                } else {
                    None
                };
                Ok(TableRow {
                    word: word_str(&g.word(w)),
                    hilbert_basis: hb.elements.len(),
                    extremal_rays: cone.rays.len(),
                    cone_equal: eq.equal(),
                    property_p: pp,
                })
            })
            .collect()
    });
    let rows = rows.into_iter().collect::<CliResult<Vec<_>>>()?;
    let mut table = Table::new(&["word", "hilbert_basis", "extremal_rays"]);
    for r in &rows {
        table.push(vec![r.word.clone(), r.hilbert_basis.to_string(), r.extremal_rays.to_string()]);
    }
    let ok = rows.iter().all(|r| r.cone_equal && r.property_p != Some(false));
    let report = TableReport {
        lie_type: g.datum().label().to_string(),
        rank: g.rank(),
        conjectural: is_conjectural(&g),
        rows,
    };
    emit(out, Format::Csv, &report, table)?;
    Ok(Status::from_ok(ok))
}

pub fn table_cmd(args: &TableArgs) -> CliResult<Status> {
    table_run(&args.group, args.property_p, args.jobs, &args.out)
}

#[derive(Serialize)]
struct SaturateReport {
    #[serde(flatten)]
    header: Header,
    conjectural: bool,
    saturated: bool,
    lattice_points: usize,
    weights: usize,
    dimension: i128,
    missing_from_character: Vec<Vec<i64>>,
    missing_from_polytope: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    property_p: Option<PropertyPRecord>,
}

pub fn saturate_cmd(args: &SaturateArgs) -> CliResult<Status> {
    let inst = Instance::new(&args.instance)?;
    let g = &inst.group;
    let rep = saturation_report(g, &inst.lambda, inst.w).ctx(|| inst.ctx())?;
    let property_p = if args.property_p {
        let cone = cone_build(g, inst.w).ctx(|| inst.ctx())?;
        let hb = hilbert_basis(g, &cone).ctx(|| inst.ctx())?;
        Some(PropertyPRecord::new(&property_p_check(g, inst.w, &hb.elements).ctx(|| inst.ctx())?))
    } else {
        None
    };
    let mut table = Table::new(&["lambda", "word", "saturated", "lattice_points", "weights", "missing_from_character", "missing_from_polytope"]);
    let list = |v: &[Weight]| v.iter().map(|w| format!("{w}")).collect::<Vec<_>>().join(" ");
    table.push(vec![
        weight_csv(&inst.lambda),
        word_str(&inst.word),
        rep.is_saturated().to_string(),
        rep.lattice_points.len().to_string(),
        rep.character.len().to_string(),
        list(&rep.missing_from_character),
        list(&rep.missing_from_polytope),
    ]);
    let ok = rep.is_saturated() && property_p.as_ref().is_none_or(PropertyPRecord::passed);
    let report = SaturateReport {
        header: inst.header(),
        conjectural: is_conjectural(g),
        saturated: rep.is_saturated(),
        lattice_points: rep.lattice_points.len(),
        weights: rep.character.len(),
        dimension: rep.character.dimension(),
        missing_from_character: rep.missing_from_character.iter().map(|w| w.0.clone()).collect(),
        missing_from_polytope: rep.missing_from_polytope.iter().map(|w| w.0.clone()).collect(),
        property_p,
    };
    emit(&args.instance.out, Format::Json, &report, table)?;
    Ok(Status::from_ok(ok))
}
