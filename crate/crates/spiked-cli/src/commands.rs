use crate::output::{config_echo, write_json, write_text};
use crate::{invalid, parse_family, CliResult, Common, Format, Outcome, RModeArg, VerifyArgs};
use serde_json::{json, Value};
use spiked::complex::{certify_report, marked_arc_complex, CertifiedType};
use spiked::cone::{build_cone, face_lattice, prism_svg, DominanceReport, DominanceStatus, MAX_CONE_DIM};
use spiked::correspond::{
    admissible_cone, admissible_marks, combinatorial_lattice, compare_lattices, predicted_facets, prop33_prediction, vertex_arcs, verify_tables,
    wrapped_betas, RMode, Status, VerificationReport,
};
use spiked::geometry::{length_differential, random_metric, DecoratedMetric};
use spiked::surface::{enumerate_arcs, enumerate_simple_betas, Beta, Family, SurfaceSpec};

fn geometric_metric(s: &SurfaceSpec, seed: u64) -> Result<DecoratedMetric, crate::CliError> {
    random_metric(s, seed).map_err(invalid)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn dominance_json(d: &DominanceReport) -> Value {
    let entries: Vec<Value> = d
        .entries
        .iter()
        .map(|e| {
            let (status, with) = match &e.status {
                DominanceStatus::Redundant => ("redundant", Vec::new()),
                DominanceStatus::SameRow(l) => ("same-row", l.clone()),
                DominanceStatus::SameFacet(l) => ("same-facet", l.clone()),
                DominanceStatus::Violated => ("violated", Vec::new()),
            };
            json!({"beta": e.label, "status": status, "with": with, "tight_vertices": e.tight_vertices})
        })
        .collect();
    json!({"consistent": d.is_consistent(), "entries": entries})
}

fn outcome_of(rep: &VerificationReport) -> Outcome {
    if !rep.mismatches().is_empty() {
        Outcome::Mismatch
    } else if !rep.inconclusives().is_empty() {
        Outcome::Inconclusive
    } else {
        Outcome::Success
    }
}

fn write_report(c: &Common, cfg: &Value, name: &str, rep: &VerificationReport, title: &str) -> Result<(), crate::CliError> {
    if c.wants(Format::Json) {
        write_json(&c.out, &format!("{name}.json"), cfg, rep.to_json())?;
    }
    if c.wants(Format::Markdown) {
        write_text(&c.out, &format!("{name}.md"), &titled(rep, title))?;
    }
    Ok(())
}

fn titled(rep: &VerificationReport, title: &str) -> String {
    let md = rep.to_markdown();
    let body = md.split_once('\n').map_or("", |(_, rest)| rest);
    format!("# {title}\n{body}")
}

fn summary(rep: &VerificationReport) -> String {
    let asserted = rep.claims.iter().filter(|c| c.asserted).count();
    let matched = rep.claims.iter().filter(|c| c.asserted && c.status == Status::Match).count();
    format!(
        "{matched}/{asserted} asserted claims match, {} mismatched, {} inconclusive, {} reported",
        rep.mismatches().len(),
        rep.inconclusives().len(),
        rep.claims.len() - asserted
    )
}

pub fn enumerate(c: &Common) -> CliResult {
    let s = c.surface()?;
    let cfg = config_echo("enumerate", c);
    let arcs: Vec<String> = enumerate_arcs(&s).iter().map(|a| a.label(&s)).collect();
    let betas: Vec<String> = enumerate_simple_betas(&s).iter().map(|b| b.label(&s)).collect();
    let surface = json!({
        "label": s.label(),
        "spec": s,
        "r": s.r(),
        "dimension": s.dimension(),
    });
    write_json(&c.out, "surface.json", &cfg, surface.clone())?;
    let doc = json!({
        "surface": surface,
        "arcs": arcs,
        "simple_betas": betas,
        "counts": {"arcs": arcs.len(), "simple_betas": betas.len(), "expected_simple_betas": s.simple_beta_count()},
    });
    write_json(&c.out, "enumerate.json", &cfg, doc)?;
    println!("{}: {} arcs, {} simple connections, N = {}", s.label(), arcs.len(), betas.len(), s.dimension());
    for b in &betas {
        println!("  {b}");
    }
    Ok(Outcome::Success)
}

pub fn complex(c: &Common) -> CliResult {
    let s = c.surface()?;
    let marks = c.marks(&s)?;
    let cfg = config_echo("complex", c);
    let (cx, _) = marked_arc_complex(&s, &marks);
    let mut doc = cx.to_json();
    doc["surface"] = json!(s.label());
    doc["marked"] = json!(marks.iter().map(|b| b.label(&s)).collect::<Vec<_>>());
    doc["dim"] = json!(cx.dim());
    doc["f_vector"] = json!(cx.f_vector());
    write_json(&c.out, "complex.json", &cfg, doc)?;
    println!("{}: dim {}, f-vector ({})", s.label(), cx.dim(), join(&cx.f_vector()));
    Ok(Outcome::Success)
}

/// Every subset of `items`, smallest first.
fn subsets(items: &[Beta]) -> Vec<Vec<Beta>> {
    let mut out: Vec<Vec<Beta>> = (0u64..1 << items.len()).map(|m| (0..items.len()).filter(|i| m >> i & 1 == 1).map(|i| items[i]).collect()).collect();
    out.sort_by_key(|v| v.len());
    out
}

pub fn certify(c: &Common) -> CliResult {
    let s = c.surface()?;
    let cfg = config_echo("certify", c);
    let admissible = admissible_marks(&s);
    if admissible.len() > 12 && c.mark.is_empty() {
        return Err(invalid("too many admissible markings to sweep; pass --mark"));
    }
    let variants = if c.mark.is_empty() { subsets(&admissible) } else { vec![c.marks(&s)?] };
    let mut results = Vec::new();
    let mut md = format!("# Certified types for {}\n\n| marked | h | N | predicted | computed | collapse | status |\n|---|---|---|---|---|---|---|\n", s.label());
    let mut rep = VerificationReport::default();
    for marks in &variants {
        let (cx, _) = marked_arc_complex(&s, marks);
        let cr = certify_report(&cx);
        let labels: Vec<String> = marks.iter().map(|b| b.label(&s)).collect();
        let locus = if labels.is_empty() { "unmarked".to_string() } else { labels.join(",") };
        let h = marks.len();
        let ok_marks = marks.iter().all(|b| admissible.contains(b));
        let predicted = if ok_marks { Some(prop33_prediction(&s, marks)) } else { None };
        let status = match &predicted {
            _ if cr.kind.is_inconclusive() => {
                rep.inconclusive(format!("{}.certify", s.label()), &locus, predicted.as_ref().map_or("-".into(), |p| p.to_string()), &cr.kind);
                "inconclusive"
            }
            Some(p) => {
                if rep.check(format!("{}.certify", s.label()), &locus, p, &cr.kind) {
                    "match"
                } else {
                    "mismatch"
                }
            }
            None => {
                rep.report_only(format!("{}.certify", s.label()), &locus, "-", &cr.kind);
                "reported"
            }
        };
        let n_expected = s.simple_beta_count() as isize - 1 - h as isize;
        md.push_str(&format!(
            "| {} | {h} | {n_expected} | {} | {} | {} | {status} |\n",
            locus,
            predicted.as_ref().map_or("-".into(), CertifiedType::to_string),
            cr.kind,
            cr.collapse
        ));
        println!("{locus}: {} ({status})", cr.kind);
        results.push(json!({
            "marked": labels,
            "h": h,
            "expected_dim": n_expected,
            "predicted": predicted.as_ref().map(|p| p.to_string()),
            "computed": cr.kind.to_string(),
            "status": status,
            "report": cr,
        }));
    }
    if c.wants(Format::Json) {
        write_json(&c.out, "certify.json", &cfg, json!({"surface": s.label(), "results": results}))?;
    }
    if c.wants(Format::Markdown) {
        write_text(&c.out, "certify.md", &md)?;
    }
    Ok(outcome_of(&rep))
}

pub fn realize(c: &Common) -> CliResult {
    let s = c.surface()?;
    let cfg = config_echo("realize", c);
    let m = geometric_metric(&s, c.seed)?;
    let mut doc = m.to_json();
    doc["coordinates"] = json!(m.coordinates());
    let lengths: Vec<Value> = enumerate_simple_betas(&s)
        .iter()
        .map(|b| spiked::geometry::horoconnection_length(&m, b).map(|l| json!({"beta": b.label(&s), "length": l})))
        .collect::<Result<_, _>>()?;
    doc["lengths"] = json!(lengths);
    write_json(&c.out, "metric.json", &cfg, doc)?;
    println!("{}: chart of dimension {}", s.label(), m.chart().dim);
    println!("  coordinates {:?}", m.coordinates());
    Ok(Outcome::Success)
}

pub fn cone(c: &Common) -> CliResult {
    let s = c.surface()?;
    let cfg = config_echo("cone", c);
    let m = geometric_metric(&s, c.seed)?;
    if s.dimension() > MAX_CONE_DIM {
        return Err(invalid(format!("cone dimension {} exceeds the supported {MAX_CONE_DIM}", s.dimension())));
    }
    let (lat, dom) = admissible_cone(&m, c.kmax)?;
    let mut doc = lat.to_json();
    doc["surface"] = json!(s.label());
    doc["facet_labels"] = json!(lat.facet_labels());
    doc["dominance"] = dominance_json(&dom);
    if c.wants(Format::Json) {
        write_json(&c.out, "cone.json", &cfg, doc)?;
    }
    if c.wants(Format::Svg) && lat.dim() <= 3 {
        let labels = vertex_labels(&lat, &m)?;
        if let Some(svg) = prism_svg(&lat, &labels) {
            write_text(&c.out, "cone.svg", &svg)?;
        }
    }
    println!(
        "{}: {} rows, lineality {}, f-vector ({}), {} facets, dominance {}",
        s.label(),
        lat.hrep.rows.len(),
        lat.lineality_dim(),
        join(&lat.f_vector()),
        lat.facets().len(),
        if dom.is_consistent() { "consistent" } else { "violated" }
    );
    Ok(if dom.is_consistent() { Outcome::Success } else { Outcome::Mismatch })
}

fn vertex_labels(lat: &spiked::cone::ConeLattice, m: &DecoratedMetric) -> Result<Vec<String>, crate::CliError> {
    let s = &m.surface;
    Ok(vertex_arcs(lat, m)?.iter().enumerate().map(|(i, a)| a.map_or(format!("v{i}"), |a| a.label(s))).collect())
}

pub fn compare(c: &Common) -> CliResult {
    let s = c.surface()?;
    let cfg = config_echo("compare", c);
    let m = geometric_metric(&s, c.seed)?;
    if s.dimension() > MAX_CONE_DIM {
        return Err(invalid(format!("cone dimension {} exceeds the supported {MAX_CONE_DIM}", s.dimension())));
    }
    let (lat, _) = admissible_cone(&m, c.kmax)?;
    let comb = combinatorial_lattice(&s, false);
    let mut rep = VerificationReport::default();
    rep.check(format!("{}.facets", s.label()), "cone", join(&predicted_facets(&s).into_iter().collect::<Vec<_>>()), join(&lat.facet_labels().into_iter().collect::<Vec<_>>()));
    rep.extend(compare_lattices(&comb, &lat, &m)?);
    write_report(c, &cfg, "report", &rep, &format!("Spread subsets against cone faces for {}", s.label()))?;
    println!("{}: {}", s.label(), summary(&rep));
    Ok(outcome_of(&rep))
}

pub fn verify(v: &VerifyArgs) -> CliResult {
    let c = &v.common;
    let cfg = {
        let mut cfg = config_echo("verify", c);
        cfg["family"] = json!(c.family.clone().unwrap_or_else(|| "all".into()));
        cfg["nmax"] = json!(v.nmax);
        cfg["rmode"] = json!(format!("{:?}", v.rmode).to_lowercase());
        cfg
    };
    let families = match &c.family {
        Some(f) => vec![parse_family(f)?],
        None => vec![Family::Polygon, Family::PuncturedPolygon, Family::Crown, Family::Moebius],
    };
    if v.nmax > 8 {
        return Err(invalid("--nmax above 8 is not supported"));
    }
    let mode = match v.rmode {
        RModeArg::Full => RMode::Full,
        RModeArg::All => RMode::All,
    };
    let rep = verify_tables(&families, v.nmax, mode, c.seed, c.kmax)?;
    write_report(c, &cfg, "report", &rep, "Verification report")?;
    for claim in rep.mismatches() {
        println!("MISMATCH {} [{}]: predicted {}, computed {}", claim.id, claim.locus, claim.predicted, claim.computed);
    }
    println!("{}", summary(&rep));
    Ok(outcome_of(&rep))
}

/// Facet labels of the cone cut out by simple and wrapped connections up to `k`.
fn facets_with_wrapped(m: &DecoratedMetric, k: u32) -> Result<Vec<String>, crate::CliError> {
    let s = &m.surface;
    let mut betas = enumerate_simple_betas(s);
    betas.extend(wrapped_betas(s, k));
    let rows = betas.iter().map(|b| Ok((b.label(s), length_differential(m, b)?.coeffs))).collect::<Result<Vec<_>, crate::CliError>>()?;
    let lat = face_lattice(&build_cone(m.chart().dim, &rows)?)?;
    Ok(lat.facets().iter().map(|f| lat.hrep.rows[f.tight[0]].labels.join("=")).collect())
}

pub fn appendix_b(c: &Common) -> CliResult {
    let s = SurfaceSpec::fully_decorated(Family::Crown, 2).map_err(invalid)?;
    let mut cfg = config_echo("reproduce-appendix-b", c);
    cfg["family"] = json!("crown");
    cfg["n"] = json!(2);
    cfg["decorate"] = json!("all");
    let tag = s.label();
    let comb = combinatorial_lattice(&s, true);
    let mut rep = VerificationReport::default();
    let mut runs = Vec::new();
    let mut svg = None;
    for seed in c.seed..c.seed + 3 {
        let m = geometric_metric(&s, seed)?;
        let locus = format!("seed {seed}");
        let (lat, dom) = admissible_cone(&m, c.kmax)?;
        let fv = lat.f_vector();
        rep.check(format!("{tag}.f-vector"), &locus, "6 9 5", join(&fv[..fv.len() - 1]));
        let facets = lat.facets();
        let tri = facets.iter().filter(|f| f.verts.len() == 3).count();
        let quad = facets.iter().filter(|f| f.verts.len() == 4).count();
        rep.check(format!("{tag}.facet-shapes"), &locus, "2 triangles, 3 quadrilaterals", format!("{tri} triangles, {quad} quadrilaterals"));
        rep.check(format!("{tag}.simple-vertices"), &locus, 6, (0..lat.rays.len()).filter(|&v| lat.is_simple_vertex(v)).count());
        rep.check(format!("{tag}.dominance.k{}", c.kmax), &locus, "consistent", if dom.is_consistent() { "consistent" } else { "violated" });
        let short = facets_with_wrapped(&m, 2.min(c.kmax))?;
        let long = facets_with_wrapped(&m, c.kmax)?;
        rep.check(format!("{tag}.wrapped-facets"), &locus, join(&short), join(&long));
        let mut lrep = compare_lattices(&comb, &lat, &m)?;
        for claim in &mut lrep.claims {
            claim.locus = format!("{locus}; {}", claim.locus);
        }
        rep.extend(lrep);
        let labels = vertex_labels(&lat, &m)?;
        if svg.is_none() {
            svg = prism_svg(&lat, &labels);
        }
        runs.push(json!({"seed": seed, "metric": m.to_json(), "cone": lat.to_json(), "vertex_arcs": labels}));
    }
    let elements: Vec<Value> = comb
        .elements
        .iter()
        .map(|e| {
            json!({
                "support": e.support.iter().map(|b| b.label(&s)).collect::<Vec<_>>(),
                "arcs": e.arcs.iter().map(|a| a.label(&s)).collect::<Vec<_>>(),
                "f_vector": e.complex.f_vector(),
                "certified": e.certified.as_ref().map(|t| t.to_string()),
            })
        })
        .collect();
    if c.wants(Format::Json) {
        let mut doc = rep.to_json();
        doc["surface"] = json!(tag);
        doc["spread_subsets"] = json!(elements);
        doc["runs"] = json!(runs);
        write_json(&c.out, "appendix_b.json", &cfg, doc)?;
    }
    if c.wants(Format::Markdown) {
        write_text(&c.out, "appendix_b.md", &titled(&rep, &format!("Triangular prism of {tag}")))?;
    }
    if c.wants(Format::Svg) {
        if let Some(svg) = &svg {
            write_text(&c.out, "prism.svg", svg)?;
        }
    }
    let outcome = outcome_of(&rep);
    println!("{}", summary(&rep));
    println!("triangular prism: {}", if matches!(outcome, Outcome::Mismatch) { "MISMATCH" } else { "MATCH" });
    Ok(outcome)
}
