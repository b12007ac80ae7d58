use std::fmt::Write;

use unimap::autgroup::AutData;
use unimap::classify::Classification;
use unimap::maps::MapProfile;
use unimap::verify::SuiteReport;

use crate::CensusLine;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub struct MapView<'a> {
    pub x: String,
    pub y: String,
    pub faces: String,
    pub profile: &'a MapProfile,
    pub aut: Option<(&'a AutData, bool, bool)>,
}

pub fn analyze(v: &MapView) -> String {
    let p = v.profile;
    let mut s = String::new();
    let _ = writeln!(s, "x             {}", v.x);
    let _ = writeln!(s, "y             {}", v.y);
    let _ = writeln!(s, "yx^-1         {}", v.faces);
    let _ = writeln!(s, "V E F         {} {} {}", p.vertices, p.edges, p.faces);
    let _ = writeln!(s, "genus         {}", p.genus);
    let _ = writeln!(s, "type          ({}, {})", p.map_type.0, p.map_type.1);
    let _ = writeln!(s, "vertex vals   {}", list(&p.vertex_valences));
    let _ = writeln!(s, "face vals     {}", list(&p.face_valences));
    let _ = writeln!(s, "uniform       {}", yes_no(p.uniform));
    if let Some((aut, regular, strict)) = v.aut {
        let _ = writeln!(s, "aut period    {}", aut.period);
        let _ = writeln!(s, "aut order     {}", aut.order);
        let _ = writeln!(s, "canonical y   {}", aut.canonical_y);
        let _ = writeln!(s, "regular       {}", yes_no(regular));
        let _ = writeln!(s, "strictly e-t  {}", yes_no(strict));
    }
    s
}

pub fn census(lines: &[CensusLine]) -> String {
    let oracle = lines.iter().any(|l| l.brute.is_some());
    let mut s = String::new();
    let _ = write!(s, "{:>3} {:>4} {:>22} {:>22} {:>20}", "k", "p", "nu_bar", "nu", "classes");
    if oracle {
        let _ = write!(s, " {:>10} {:>5}", "brute", "match");
    }
    s.push('\n');
    for l in lines {
        let r = &l.row;
        let _ = write!(s, "{:>3} {:>4} {:>22} {:>22} {:>20}", r.k, r.p, r.nu_bar, r.nu, r.classes);
        if let (Some(b), Some(m)) = (l.brute, l.matches) {
            let _ = write!(s, " {:>10} {:>5}", b, yes_no(m));
        }
        s.push('\n');
        if let Some(reps) = &l.representatives {
            for y in reps {
                let _ = writeln!(s, "      {y}");
            }
        }
    }
    s
}

fn chain(c: &Classification) -> String {
    if c.extension_chain.is_empty() {
        return "-".to_string();
    }
    c.extension_chain
        .iter()
        .map(|e| format!("{} {} < {} (index {})", e.case_name, e.sigma, e.sigma_prime, e.index))
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn classification(c: &Classification) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "k             {}", c.k);
    match c.t {
        Some(t) => {
            let _ = writeln!(s, "t             {t}");
        }
        None => {
            let _ = writeln!(s, "map           regular, y = x^{}", c.k);
        }
    }
    let _ = writeln!(s, "genus         {}", c.genus);
    let _ = writeln!(s, "signature     {}", c.signature);
    let _ = writeln!(s, "vector        {}", c.vector);
    let _ = writeln!(s, "verdict       {}", c.verdict);
    let _ = writeln!(s, "|Aut(M)|      {}", c.aut_map_order);
    if let Some(a) = &c.aut_surface {
        let _ = writeln!(s, "Aut(X)        {}, order {}", a.name, a.order);
        if let Some(p) = &a.presentation {
            let _ = writeln!(s, "presentation  {p}");
        }
    }
    let _ = writeln!(s, "extensions    {}", chain(c));
    if let Some(eq) = &c.curve_equation {
        let _ = writeln!(s, "curve         {eq}");
    }
    if let Some(n) = &c.further_extension_note {
        let _ = writeln!(s, "further       {n}");
    }
    for n in &c.notes {
        let _ = writeln!(s, "note          {n}");
    }
    s
}

pub fn classifications(all: &[Classification]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>2} {:>3} {:>3} {:<22} {:<20} {:<28} {:>6}  extensions",
        "g", "k", "t", "verdict", "signature", "Aut(X)", "order"
    );
    for c in all {
        let t = c.t.map_or("reg".to_string(), |t| t.to_string());
        let (name, order) = c
            .aut_surface
            .as_ref()
            .map_or(("-".to_string(), "-".to_string()), |a| (a.name.clone(), a.order.to_string()));
        let cases: Vec<String> = c.extension_chain.iter().map(|e| e.case_name.to_string()).collect();
        let _ = writeln!(
            s,
            "{:>2} {:>3} {:>3} {:<22} {:<20} {:<28} {:>6}  {}",
            c.genus,
            c.k,
            t,
            c.verdict.to_string(),
            c.signature.to_string(),
            name,
            order,
            if cases.is_empty() { "-".to_string() } else { cases.join(",") }
        );
    }
    s
}

pub fn suites(reports: &[SuiteReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let _ = write!(s, "{status} {:<26} {:>8} checks", r.name, r.checks);
        if let Some(ce) = &r.counterexample {
            let _ = write!(s, "  first counterexample {ce}");
        }
        s.push('\n');
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    let _ = writeln!(s, "{passed}/{} suites passed", reports.len());
    s
}
