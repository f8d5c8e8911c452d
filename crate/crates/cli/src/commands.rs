use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use thiserror::Error;

use dissect_core::arrangement::{
    bayer_sturmfels_fiber, chamber_count, chambers_of_restriction, check_structure, complement_indicator, f_vector,
    generalized_char_poly, integrate, ArrangementModel, CountError, Family, Integral, Valuation,
};
use dissect_core::builders::{
    build_abstract, build_circle, build_hyperplane_with, build_projective_with, build_sphere_with, build_toric_with,
    BuildError, BuildOptions, CentralSpec, Hyperplane, HyperplaneSpec, DEFAULT_BUILD_CAP,
};
use dissect_core::closedforms::{
    closed_form_f_vector, f_buck_projective, f_simple_hyperplane, f_simple_sphere, f_simple_toric, ClosedFormError, Mode,
    RankCensus,
};
use dissect_core::corpus::random_hyperplane_spec;
use dissect_core::exactmath::Rational;
use dissect_core::oracle::{
    circle_arcs, configured_cap, enumerate_faces_with, fiber_count_direct, oracle_f_vector, quotient_counts,
    toric_chambers_2d, OracleError, QuotientMode,
};
use dissect_core::Exec;

use crate::input::{parse, ArrangementFile, InputError};
use crate::report::{Check, FlatSummary, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error("{0}")]
    Usage(String),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

impl CliError {
    /// 2 for bad input, 3 when the input is well formed but outside what
    /// a computation supports (caps, cellularity, simplicity).
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Build(BuildError::TooMany { .. } | BuildError::NotCellular2D(_)) => EXIT_PRECONDITION,
            CliError::Oracle(OracleError::CapExceeded { .. } | OracleError::NotCellular(_) | OracleError::Precondition(_)) => {
                EXIT_PRECONDITION
            }
            CliError::Count(CountError::NegativeCount { .. } | CountError::PreconditionFailed(_)) => EXIT_PRECONDITION,
            CliError::ClosedForm(ClosedFormError::NotSimple | ClosedFormError::NotGeneralPosition) => EXIT_PRECONDITION,
            _ => EXIT_INPUT,
        }
    }
}

/// Options shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub exec: Exec,
    /// Cap on hyperplanes for the `3^n` oracle.
    pub oracle_cap: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { exec: Exec::default(), oracle_cap: configured_cap() }
    }
}

impl Settings {
    fn build_options(&self) -> BuildOptions {
        BuildOptions { exec: self.exec, max_hypersurfaces: DEFAULT_BUILD_CAP.max(self.oracle_cap) }
    }
}

pub fn load(path: &Path) -> Result<ArrangementFile, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    Ok(parse(&bytes)?)
}

pub fn build(file: &ArrangementFile, s: &Settings) -> Result<ArrangementModel, CliError> {
    let opts = s.build_options();
    Ok(match file {
        ArrangementFile::Hyperplane(spec) => build_hyperplane_with(spec, &opts)?,
        ArrangementFile::Toric(spec) => build_toric_with(spec, &opts)?,
        ArrangementFile::Sphere(spec) => build_sphere_with(spec, &opts)?,
        ArrangementFile::Projective(spec) => build_projective_with(spec, &opts)?,
        ArrangementFile::Circle(spec) => build_circle(spec)?,
        ArrangementFile::Abstract(spec) => build_abstract(spec)?,
    })
}

fn header(m: &ArrangementModel) -> Report {
    Report {
        family: Some(m.family().to_string()),
        ambient_dim: Some(m.ambient_dim()),
        asserted_cellular: m.is_asserted_cellular().then_some(true),
        ..Report::default()
    }
}

pub fn describe(m: &ArrangementModel) -> Result<Report, CliError> {
    Ok(Report {
        census: Some(m.dimension_census()),
        simple: Some(m.is_simple()),
        char_poly: Some(generalized_char_poly(m).into_coeffs()),
        chambers: Some(chamber_count(m)?),
        f_vector: Some(f_vector(m)?.counts),
        ..header(m)
    })
}

pub fn charpoly(m: &ArrangementModel) -> Report {
    Report { char_poly: Some(generalized_char_poly(m).into_coeffs()), ..Report::default() }
}

pub fn chambers(m: &ArrangementModel) -> Result<Report, CliError> {
    Ok(Report { chambers: Some(chamber_count(m)?), ..Report::default() })
}

pub fn faces(m: &ArrangementModel) -> Result<Report, CliError> {
    Ok(Report { f_vector: Some(f_vector(m)?.counts), ..Report::default() })
}

/// Chains of two or more flats go through the fiber formula; a single
/// flat `Y` gives the number of chambers of the restriction to `Y`.
pub fn fiber(m: &ArrangementModel, chain: &[String]) -> Result<Report, CliError> {
    let idx = chain
        .iter()
        .map(|id| m.index_of(id).ok_or_else(|| CliError::Usage(format!("unknown flat `{id}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    let n = match idx.as_slice() {
        [] => return Err(CliError::Usage("--chain needs at least one flat id".into())),
        [y] => chambers_of_restriction(m, *y)?,
        _ => bayer_sturmfels_fiber(m, &idx)?,
    };
    Ok(Report { fibers: Some([(chain.join(","), n)].into()), ..Report::default() })
}

pub fn poset(m: &ArrangementModel) -> Report {
    let p = m.poset();
    let x = m.ambient();
    let flats = p
        .linear_extension()
        .iter()
        .map(|&i| {
            let f = m.flat(i);
            let mut covers: Vec<String> = p.covers().iter().filter(|(_, b)| *b == i).map(|(a, _)| p.id(*a).to_string()).collect();
            covers.sort();
            FlatSummary {
                id: f.id.clone(),
                rank: p.rank(i),
                dim: f.dim,
                poin_c: f.poin_c.coeffs().to_vec(),
                kappa: f.kappa.clone(),
                mu: m.mobius().mu(x, i).clone(),
                covers,
            }
        })
        .collect();
    Report { flats: Some(flats), ..header(m) }
}

/// Closed-form f-vector of a model next to the general formula.
pub fn closedform_model(m: &ArrangementModel, force: bool) -> Result<Report, CliError> {
    let mode = if force { Mode::Forced } else { Mode::Validated };
    let closed = closed_form_f_vector(m, mode)?;
    let general = f_vector(m)?.counts;
    let mut r = Report { closed_form: Some(closed.clone()), ..header(m) };
    r.verification = Some(vec![Check::compare("closed form vs f-vector", closed, general)]);
    Ok(r)
}

/// Closed forms from parameters alone.
pub enum ClosedFormQuery {
    Hyperplane { census: Vec<BigInt>, dim: usize },
    Sphere { census: Vec<BigInt>, dim: usize },
    Toric { a0: BigInt, dim: usize },
    Projective { n: usize, dim: usize },
}

pub fn closedform_params(q: &ClosedFormQuery) -> Report {
    let (family, l, f): (&str, usize, Vec<BigInt>) = match q {
        ClosedFormQuery::Hyperplane { census, dim } => {
            ("hyperplane", *dim, (0..=*dim).map(|k| f_simple_hyperplane(&RankCensus::new(census.clone()), *dim, k)).collect())
        }
        ClosedFormQuery::Sphere { census, dim } => {
            ("sphere", *dim, (0..=*dim).map(|k| f_simple_sphere(&RankCensus::new(census.clone()), *dim, k)).collect())
        }
        ClosedFormQuery::Toric { a0, dim } => ("toric", *dim, (0..=*dim).map(|k| f_simple_toric(a0, *dim, k)).collect()),
        ClosedFormQuery::Projective { n, dim } => ("projective", *dim, (0..=*dim).map(|k| f_buck_projective(*n, *dim, k)).collect()),
    };
    Report { family: Some(family.into()), ambient_dim: Some(l), closed_form: Some(f), ..Report::default() }
}

fn as_central_hyperplanes(c: &CentralSpec) -> HyperplaneSpec {
    HyperplaneSpec::new(c.ambient_dim + 1, c.normals.iter().map(|v| Hyperplane::new(v.clone(), Rational::from_integer(0.into()))).collect())
}

/// Every formula that has an independent check, side by side with it.
pub fn verify(file: &ArrangementFile, s: &Settings) -> Result<Report, CliError> {
    let m = build(file, s)?;
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    let chambers = chamber_count(&m)?;
    let f = f_vector(&m)?.counts;

    match file {
        ArrangementFile::Hyperplane(spec) => {
            let fp = enumerate_faces_with(spec, s.oracle_cap, s.exec)?;
            rows.push(Check::compare("chambers", chambers.clone(), BigInt::from(fp.chambers())));
            rows.push(Check::compare("f-vector", f.clone(), oracle_f_vector(&fp)));
            let (mut formula, mut direct, mut bad) = (BigInt::from(0), BigInt::from(0), Vec::new());
            let chains: Vec<Vec<usize>> = m.poset().enumerate_chains(2).into_iter().filter(|c| c.len() <= 3).collect();
            for chain in &chains {
                let ids: Vec<&str> = chain.iter().map(|&i| m.flat(i).id.as_str()).collect();
                let a = bayer_sturmfels_fiber(&m, chain)?;
                let b = fiber_count_direct(&fp, &ids)?;
                if a != b {
                    bad.push(ids.join(","));
                }
                formula += a;
                direct += b;
            }
            let mut row = Check::compare(format!("fibers, {} chains (total)", chains.len()), formula, direct);
            row.pass &= bad.is_empty();
            rows.push(row);
            if !bad.is_empty() {
                notes.push(format!("fiber mismatch on chains: {}", bad.join("; ")));
            }
        }
        ArrangementFile::Toric(_) if m.ambient_dim() == 2 => {
            rows.push(Check::compare("chambers (Euler relation on T^2)", chambers.clone(), toric_chambers_2d(&m)?));
        }
        ArrangementFile::Toric(_) => notes.push("no independent oracle for tori of dimension 3 or more".into()),
        ArrangementFile::Sphere(spec) | ArrangementFile::Projective(spec) => {
            let fp = enumerate_faces_with(&as_central_hyperplanes(spec), s.oracle_cap, s.exec)?;
            let mode = if m.family() == Family::Sphere { QuotientMode::Sphere } else { QuotientMode::Projective };
            rows.push(Check::compare("f-vector (central quotient)", f.clone(), quotient_counts(&fp, mode)?));
            let factor = if mode == QuotientMode::Sphere { 1 } else { 2 };
            rows.push(Check::compare("central chambers", &chambers * factor, BigInt::from(fp.chambers())));
        }
        ArrangementFile::Circle(spec) => {
            rows.push(Check::compare("chambers (arcs)", chambers.clone(), BigInt::from(circle_arcs(&spec.points))));
        }
        ArrangementFile::Abstract(_) => notes.push("abstract model: structural checks only".into()),
    }

    let l = m.ambient_dim();
    let sign = BigInt::from(if l % 2 == 0 { 1 } else { -1 });
    let kappa_integral = integrate(&complement_indicator(&m), &Valuation::euler(&m)).expect("every flat has κ");
    rows.push(Check::compare(
        "integral of complement, kappa",
        integral_text(&Integral::Scalar(Rational::from_integer(&sign * &chambers))),
        integral_text(&kappa_integral),
    ));
    let nu = integrate(&complement_indicator(&m), &Valuation::poincare(&m)).expect("every flat has Poin_c");
    rows.push(Check::compare("integral of complement, Poin_c", generalized_char_poly(&m).to_string(), integral_text(&nu)));

    let st = check_structure(&m);
    rows.push(Check::compare("Mobius recursion", st.mobius_recursion, true));
    rows.push(Check::compare("intervals geometric", st.geometric_intervals, true));
    rows.push(Check::compare("mu alternates in sign", st.sign_alternation, true));
    let euler = st.euler_relation.map_or_else(|| "undefined".to_string(), |b| b.to_string());
    rows.push(Check::compare("Euler relation", euler, "true".to_string()));

    if m.is_simple() {
        if let Ok(cf) = closed_form_f_vector(&m, Mode::Validated) {
            rows.push(Check::compare("closed form", cf, f.clone()));
        }
    }

    Ok(Report {
        chambers: Some(chambers),
        f_vector: Some(f),
        char_poly: Some(generalized_char_poly(&m).into_coeffs()),
        verification: Some(rows),
        notes,
        ..header(&m)
    })
}

fn integral_text(i: &Integral) -> String {
    match i {
        Integral::Scalar(r) => dissect_core::exactmath::format_rational(r),
        Integral::Polynomial(p) => match i.as_int_polynomial() {
            Some(q) => q.to_string(),
            None => format!("{p:?}"),
        },
    }
}

/// `verify` over seeded random hyperplane arrangements; one row per seed.
pub fn verify_random(count: u64, seed: u64, max_dim: usize, max_n: usize, s: &Settings) -> Result<Report, CliError> {
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for k in 0..count {
        let spec = random_hyperplane_spec(seed + k, max_dim, max_n);
        let label = format!("seed {} (l={}, n={})", seed + k, spec.ambient_dim, spec.hyperplanes.len());
        let r = verify(&ArrangementFile::Hyperplane(spec), s)?;
        let checks = r.verification.unwrap_or_default();
        let passed = checks.iter().filter(|c| c.pass).count();
        for c in checks.iter().filter(|c| !c.pass) {
            notes.push(format!("{label}: {} {} vs {}", c.quantity, c.formula, c.oracle));
        }
        rows.push(Check::compare(label, format!("{passed}/{}", checks.len()), format!("{}/{}", checks.len(), checks.len())));
    }
    let mut by_result: BTreeMap<bool, usize> = BTreeMap::new();
    for r in &rows {
        *by_result.entry(r.pass).or_default() += 1;
    }
    notes.push(format!("{} of {} arrangements verified", by_result.get(&true).unwrap_or(&0), rows.len()));
    Ok(Report { verification: Some(rows), notes, ..Report::default() })
}
