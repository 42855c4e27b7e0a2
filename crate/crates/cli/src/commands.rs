use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use knotcensus::braid::{build_ttk, closure_component_count, exponent_sum, is_lorenz_form};
use knotcensus::census::{
    group_by_tet, lorenz_count_table, parse_manifold_counts, sort_and_name, stats_table, CountTable,
};
use knotcensus::cusp::{
    audit_lemma_bounds, enumerate_short_slopes, is_shortest_basis, reduce_basis, slope_length,
    Slope, TranslationPair,
};
use knotcensus::diagram::{
    braid_closure_pd, extract_dt, mirror_pd, realize_dt, writhe, PlanarDiagram,
};
use knotcensus::homology::{
    filled_homology, parse_matrix, smith_normal_form, AbelianGroup, IntMatrix,
    PeripheralPresentation,
};
use knotcensus::invariants::{jones as jones_poly, jones_sqrt_t, kauffman_bracket, InvariantError};
use knotcensus::notation::{
    format_jones_entry, parse_census_str, parse_dt, parse_knot_notation, parse_ttk, CensusRecord,
    KnotNotation,
};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::{Basis, Failure, Inputs, Output};

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn done(stdout: String) -> Output {
    Output {
        stdout,
        ..Output::default()
    }
}

fn failed(f: Failure) -> Output {
    Output {
        failure: Some(f),
        ..Output::default()
    }
}

/// `(line number, text)` of every input, line 0 for `--input`.
fn collect_inputs(inputs: &Inputs) -> Result<Vec<(usize, String)>, Failure> {
    if let Some(v) = &inputs.input {
        return Ok(vec![(0, v.clone())]);
    }
    let path = inputs
        .file
        .as_ref()
        .expect("clap requires one of --input/--file");
    Ok(read(path)?
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect())
}

/// Runs `f` on every input in parallel; output keeps input order.
fn batch<F>(inputs: &Inputs, f: F) -> Output
where
    F: Fn(&str) -> Result<String, String> + Sync,
{
    let items = match collect_inputs(inputs) {
        Ok(items) => items,
        Err(e) => return failed(e),
    };
    let results: Vec<Result<String, String>> = items.par_iter().map(|(_, text)| f(text)).collect();
    let mut out = Output::default();
    let mut errors = 0;
    for ((line, text), result) in items.iter().zip(results) {
        match result {
            Ok(s) => {
                out.stdout.push_str(&s);
                out.stdout.push('\n');
            }
            Err(e) => {
                errors += 1;
                if *line == 0 {
                    writeln!(out.stderr, "{text}: {e}").unwrap();
                } else {
                    writeln!(out.stderr, "line {line}: {text}: {e}").unwrap();
                }
            }
        }
    }
    if errors > 0 {
        out.failure = Some(Failure::Input(format!(
            "{errors} of {} inputs failed",
            items.len()
        )));
    }
    out
}

fn diagram_of(text: &str) -> Result<PlanarDiagram, String> {
    match parse_knot_notation(text).map_err(|e| e.to_string())? {
        KnotNotation::Ttk(spec) => Ok(braid_closure_pd(&build_ttk(&spec))),
        KnotNotation::Braid(word) => Ok(braid_closure_pd(&word)),
        KnotNotation::Dt(code) => realize_dt(&code).map_err(|e| e.to_string()),
    }
}

pub fn jones(inputs: &Inputs, mirror: bool, raw_bracket: bool) -> Output {
    batch(inputs, |text| {
        let mut d = diagram_of(text)?;
        if mirror {
            d = mirror_pd(&d);
        }
        if raw_bracket {
            return kauffman_bracket(&d)
                .map(|b| b.display_with("A"))
                .map_err(|e| e.to_string());
        }
        match jones_poly(&d) {
            Ok(v) => Ok(format_jones_entry(&v)
                .map_err(|e| e.to_string())?
                .to_string()),
            // even number of components: exponents live in t^(1/2)
            Err(InvariantError::FractionalExponent(_)) => {
                let v = jones_sqrt_t(&d).map_err(|e| e.to_string())?;
                Ok(format!(
                    "t^1/2 {}",
                    format_jones_entry(&v).map_err(|e| e.to_string())?
                ))
            }
            Err(e) => Err(e.to_string()),
        }
    })
}

pub fn dt_realize(inputs: &Inputs) -> Output {
    batch(inputs, |text| {
        let code = parse_dt(text).map_err(|e| e.to_string())?;
        let d = realize_dt(&code).map_err(|e| e.to_string())?;
        let back = extract_dt(&d).map_err(|e| e.to_string())?;
        Ok(format!(
            "crossings {} writhe {} dt {back}",
            d.crossing_count(),
            writhe(&d)
        ))
    })
}

pub fn ttk(inputs: &Inputs) -> Output {
    batch(inputs, |text| {
        let spec = parse_ttk(text).map_err(|e| e.to_string())?;
        let word = build_ttk(&spec);
        Ok(format!(
            "braid {word}; exponent_sum {}; components {}; lorenz {}",
            exponent_sum(&word),
            closure_component_count(&word),
            is_lorenz_form(&spec)
        ))
    })
}

fn pair_of(basis: &Basis) -> Result<TranslationPair, Failure> {
    let l: Complex64 = basis
        .l
        .trim()
        .parse()
        .map_err(|_| Failure::Input(format!("not a complex number: {:?}", basis.l)))?;
    TranslationPair::new(basis.m, l).map_err(|e| Failure::Input(e.to_string()))
}

fn describe(t: &TranslationPair) -> String {
    format!("m {:.12} l {:.12}{:+.12}i", t.m(), t.l().re, t.l().im)
}

pub fn slopes(basis: &Basis, bound: f64, no_reduce: bool) -> Output {
    let run = || -> Result<Output, Failure> {
        let given = pair_of(basis)?;
        let mut out = Output::default();
        let t = if no_reduce {
            if !is_shortest_basis(&given) {
                return Err(Failure::Input(
                    "basis is not a shortest basis; drop --no-reduce".into(),
                ));
            }
            given
        } else {
            let t = reduce_basis(&given).map_err(|e| Failure::Input(e.to_string()))?;
            if t != given {
                writeln!(out.stderr, "using reduced basis {}", describe(&t)).unwrap();
            }
            t
        };
        let found = enumerate_short_slopes(&t, bound).map_err(|e| Failure::Input(e.to_string()))?;
        for s in found {
            writeln!(out.stdout, "{s} {:.9}", slope_length(&t, s)).unwrap();
        }
        Ok(out)
    };
    run().unwrap_or_else(failed)
}

pub fn reduce(basis: &Basis) -> Output {
    let run = || -> Result<Output, Failure> {
        let t = reduce_basis(&pair_of(basis)?).map_err(|e| Failure::Input(e.to_string()))?;
        Ok(done(format!(
            "{}\narea {:.12}\nmaximal_cusp {}\n",
            describe(&t),
            t.area(),
            t.is_maximal_cusp()
        )))
    };
    run().unwrap_or_else(failed)
}

pub fn audit(samples: u64, seed: u64) -> Output {
    let report = audit_lemma_bounds(samples, seed);
    let mut out = done(report.to_string());
    if !report.passed() {
        out.failure = Some(Failure::Internal("lemma bounds violated".into()));
    }
    out
}

fn is_unimodular(m: &IntMatrix) -> bool {
    m.determinant()
        .map(|d| d == 1.into() || d == (-1).into())
        .unwrap_or(false)
}

pub fn snf(path: &Path) -> Output {
    let run = || -> Result<Output, Failure> {
        let a = parse_matrix(&read(path)?).map_err(|e| Failure::Input(e.to_string()))?;
        let s = smith_normal_form(&a);
        if &(&s.u * &a) * &s.v != s.d
            || !is_unimodular(&s.u)
            || !is_unimodular(&s.v)
            || !s.d.is_diagonal()
        {
            return Err(Failure::Internal("Smith form check failed".into()));
        }
        let diag = s.diagonal();
        let factors: Vec<String> = diag.iter().map(ToString::to_string).collect();
        let group = AbelianGroup::from_invariant_factors(a.cols(), &diag);
        Ok(done(format!(
            "invariant_factors {}\ncokernel {group}\nU\n{}D\n{}V\n{}",
            factors.join(" "),
            s.u,
            s.d,
            s.v
        )))
    };
    run().unwrap_or_else(failed)
}

pub fn fill_h1(path: &Path, p: i64, q: i64) -> Output {
    let run = || -> Result<Output, Failure> {
        let pres = PeripheralPresentation::parse(&read(path)?)
            .map_err(|e| Failure::Input(e.to_string()))?;
        let slope = Slope::new(p, q).map_err(|e| Failure::Input(e.to_string()))?;
        Ok(done(format!("{}\n", filled_homology(&pres, slope))))
    };
    run().unwrap_or_else(failed)
}

fn read_records(files: &[PathBuf]) -> Result<Vec<CensusRecord>, Failure> {
    let mut all = Vec::new();
    for f in files {
        let text = read(f)?;
        let records =
            parse_census_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", f.display())))?;
        all.extend(records);
    }
    Ok(all)
}

pub fn census_sort(path: &Path, tet: u32) -> Output {
    let run = || -> Result<Output, Failure> {
        let records = read_records(&[path.to_path_buf()])?;
        let sorted = sort_and_name(records, tet).map_err(|e| Failure::Input(e.to_string()))?;
        Ok(done(knotcensus::notation::write_census(&sorted)))
    };
    run().unwrap_or_else(failed)
}

fn render(table: &CountTable, csv: bool) -> String {
    if csv {
        table.to_csv()
    } else {
        table.to_text()
    }
}

pub fn census_stats(files: &[PathBuf], manifolds: Option<&str>, csv: bool) -> Output {
    let run = || -> Result<Output, Failure> {
        let groups =
            group_by_tet(read_records(files)?).map_err(|e| Failure::Input(e.to_string()))?;
        let counts = parse_manifold_counts(manifolds.unwrap_or(""))
            .map_err(|e| Failure::Input(e.to_string()))?;
        Ok(done(render(&stats_table(&groups, &counts), csv)))
    };
    run().unwrap_or_else(failed)
}

pub fn census_lorenz(files: &[PathBuf], csv: bool) -> Output {
    let run = || -> Result<Output, Failure> {
        let groups =
            group_by_tet(read_records(files)?).map_err(|e| Failure::Input(e.to_string()))?;
        Ok(done(render(&lorenz_count_table(&groups), csv)))
    };
    run().unwrap_or_else(failed)
}
