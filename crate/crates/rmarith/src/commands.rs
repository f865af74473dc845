//! One function per subcommand, from parsed inputs to a report.
//!
//! The `parse_*` helpers turn flag strings into core values and name the
//! flag in their errors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rmarith_core::cmrm::wide_representatives;
use rmarith_core::contfrac::QuadraticReal;
use rmarith_core::heights::{fractional_part, minkowski_q, quantum_point};
use rmarith_core::quadforms::ClassGroup;
use rmarith_core::{
    bratteli_blocks, cf_expand, char_poly, convergents, ideal_classes_for_matrix, perron_eigenvalue,
    projective_height, sha_group, similarity_class_count_bruteforce, IntegerMatrix, Polynomial,
    QuadraticIrrational, QuadraticOrder,
};

use crate::cache::ClassNumberCache;
use crate::count::{count_projective_parallel, count_quantum, doubling_bounds, loglog_slope};
use crate::report::{
    CfReport, ClassGroupReport, ConductorReport, CountReport, CountRow, HeightReport, ShaReport,
};
use crate::{scan, CliError, CliResult};

/// Shared state for a single invocation.
#[derive(Debug)]
pub struct Context {
    pub cache: ClassNumberCache,
    pub threads: usize,
}

impl Context {
    pub fn new(cache: ClassNumberCache, threads: usize) -> Self {
        Self {
            cache,
            threads: threads.max(1),
        }
    }
}

pub fn parse_int(flag: &'static str, s: &str) -> CliResult<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| CliError::flag(flag, format!("expected an integer, got {s:?}")))
}

pub fn parse_int_list(flag: &'static str, s: &str) -> CliResult<Vec<BigInt>> {
    s.split(',').map(|t| parse_int(flag, t)).collect()
}

pub fn parse_rational(flag: &'static str, s: &str) -> CliResult<BigRational> {
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(flag, s)?)),
        Some((n, d)) => {
            let (n, d) = (parse_int(flag, n)?, parse_int(flag, d)?);
            if d.is_zero() {
                return Err(CliError::flag(flag, "zero denominator"));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// `(P + √D)/Q` from `"P,Q,D"`.
pub fn parse_quadratic(flag: &'static str, s: &str) -> CliResult<QuadraticIrrational> {
    let v = parse_int_list(flag, s)?;
    let [p, q, d] = <[BigInt; 3]>::try_from(v)
        .map_err(|_| CliError::flag(flag, format!("expected P,Q,D, got {s:?}")))?;
    QuadraticIrrational::new(p, q, d).map_err(CliError::at(flag))
}

/// A height argument: `p/q`, an integer, `quad:P,Q,D` or `sqrt:N`.
pub fn parse_theta(flag: &'static str, s: &str) -> CliResult<QuadraticReal> {
    if let Some(rest) = s.strip_prefix("quad:") {
        return Ok(QuadraticReal::Irrational(parse_quadratic(flag, rest)?));
    }
    if let Some(rest) = s.strip_prefix("sqrt:") {
        let n = parse_int(flag, rest)?;
        return Ok(QuadraticReal::Irrational(
            QuadraticIrrational::sqrt(n).map_err(CliError::at(flag))?,
        ));
    }
    Ok(QuadraticReal::Rational(parse_rational(flag, s)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassGroupInput {
    Discriminant(BigInt),
    Order { dk: BigInt, f: BigInt },
}

pub fn classgroup(ctx: &mut Context, input: &ClassGroupInput) -> CliResult<ClassGroupReport> {
    let order = match input {
        ClassGroupInput::Discriminant(d) => {
            QuadraticOrder::from_discriminant(d).map_err(CliError::at("-D"))?
        }
        ClassGroupInput::Order { dk, f } => {
            QuadraticOrder::new(dk.clone(), f.clone()).map_err(CliError::at("--dk/-f"))?
        }
    };
    let d = order.discriminant();
    let group = ClassGroup::new(d)?;
    let wide = group.wide()?;
    let (h, h_wide) = ctx.cache.class_numbers(d)?;
    if h != group.order() as u64 || h_wide != wide.order() as u64 {
        return Err(CliError::Internal(format!(
            "D = {d}: class numbers ({h}, {h_wide}) disagree with the composition table ({}, {})",
            group.order(),
            wide.order()
        )));
    }
    Ok(ClassGroupReport {
        discriminant: d.to_string(),
        fundamental_discriminant: order.fundamental_discriminant().to_string(),
        conductor: order.conductor().to_string(),
        h,
        h_wide,
        divisors: group.structure().elementary_divisors().to_vec(),
        wide_divisors: wide.structure().elementary_divisors().to_vec(),
        forms: group.forms().iter().map(ToString::to_string).collect(),
    })
}

pub fn rm_conductor(ctx: &mut Context, d: &BigInt, f: u64, limit: u64) -> CliResult<ConductorReport> {
    if f == 0 {
        return Err(CliError::flag("-f", "conductor must be at least 1"));
    }
    let m = scan::rm_conductor_parallel(d, f, limit, ctx.threads, &mut ctx.cache)
        .map_err(CliError::at("-d"))?;
    let reps = wide_representatives(m.rm_order.discriminant())?;
    if reps.len() as u64 != m.rm_class_number {
        return Err(CliError::Internal(format!(
            "{} wide classes enumerated for class number {}",
            reps.len(),
            m.rm_class_number
        )));
    }
    Ok(ConductorReport {
        d: m.d.to_string(),
        f,
        cm_discriminant: m.cm_order.discriminant().to_string(),
        cm_class_number: m.cm_class_number,
        rm_conductor: m.rm_conductor,
        rm_discriminant: m.rm_order.discriminant().to_string(),
        rm_class_number: m.rm_class_number,
        rm_field_discriminant: m.rm_order.fundamental_discriminant().to_string(),
        ideal_classes: reps.iter().map(ToString::to_string).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CfInput {
    Sqrt(BigInt),
    Quadratic(QuadraticIrrational),
    Rational(BigRational),
}

pub fn cf(input: &CfInput, n_convergents: usize, n_blocks: usize) -> CliResult<CfReport> {
    let (x, flag) = match input {
        CfInput::Sqrt(n) => (
            QuadraticReal::Irrational(QuadraticIrrational::sqrt(n.clone()).map_err(CliError::at("--sqrt"))?),
            "--sqrt",
        ),
        CfInput::Quadratic(q) => (QuadraticReal::Irrational(q.clone()), "--quadratic"),
        CfInput::Rational(r) => (QuadraticReal::Rational(r.clone()), "--rational"),
    };
    let expansion = cf_expand(&x);
    let count = expansion.finite_len().map_or(n_convergents, |n| n.min(n_convergents));
    let conv = convergents(&expansion, count)?;
    let blocks = if n_blocks == 0 {
        Vec::new()
    } else {
        bratteli_blocks(&expansion, n_blocks)
            .map_err(CliError::at(flag))?
            .blocks
            .iter()
            .map(|b| [&b[0][0], &b[0][1], &b[1][0], &b[1][1]].map(ToString::to_string))
            .collect()
    };
    let strings = |v: &[BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    Ok(CfReport {
        input: x.to_string(),
        expansion: expansion.to_string(),
        preperiod: strings(expansion.preperiod()),
        period: strings(expansion.period()),
        periodic: expansion.is_periodic(),
        minimal_polynomial: match &x {
            QuadraticReal::Irrational(q) => Some(strings(&q.minimal_polynomial())),
            QuadraticReal::Rational(_) => None,
        },
        convergents: conv.iter().map(ToString::to_string).collect(),
        blocks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShaInput {
    Matrix(Vec<BigInt>),
    CharPoly(Vec<BigInt>),
}

pub fn sha(input: &ShaInput, similarity_bound: Option<u64>) -> CliResult<ShaReport> {
    let (matrix, poly, perron, cl, flag) = match input {
        ShaInput::Matrix(entries) => {
            let flag = "--matrix";
            let m = IntegerMatrix::from_row_major(entries.iter().cloned()).map_err(CliError::at(flag))?;
            if m.dim() != 2 {
                return Err(CliError::flag(flag, "expected four entries a,b,c,d"));
            }
            let perron = perron_eigenvalue(&m).map_err(CliError::at(flag))?;
            let cl = ideal_classes_for_matrix(&m).map_err(CliError::at(flag))?;
            (Some(entries), char_poly(&m), Some(perron.to_string()), cl, flag)
        }
        ShaInput::CharPoly(coeffs) => {
            let flag = "--charpoly";
            let p = Polynomial::new(coeffs.iter().cloned()).map_err(CliError::at(flag))?;
            if p.degree() != 2 || !p.is_monic() {
                return Err(CliError::flag(flag, format!("expected a monic quadratic, got {p}")));
            }
            let disc = p.discriminant().map_err(CliError::at(flag))?;
            if rmarith_core::arith::is_square(&disc) {
                return Err(CliError::flag(flag, format!("{p} is reducible over Q")));
            }
            let cl = ClassGroup::new(&disc).map_err(CliError::at(flag))?.wide()?.structure();
            (None, p, None, cl, flag)
        }
    };
    let report = sha_group(&cl).map_err(CliError::at(flag))?;
    let similarity = similarity_bound
        .map(|b| similarity_class_count_bruteforce(&poly, b))
        .transpose()
        .map_err(CliError::at("--similarity-bound"))?;
    Ok(ShaReport {
        matrix: matrix.map(|m| m.iter().map(ToString::to_string).collect()),
        charpoly: poly.to_string(),
        discriminant: poly.discriminant()?.to_string(),
        perron,
        class_group: cl.elementary_divisors().to_vec(),
        h: cl.order(),
        k: report.k,
        sha: report.sha_divisors().to_vec(),
        sha_order: report.sha_order(),
        similarity_classes: similarity.as_ref().map(|s| s.count() as u64),
        similarity_word_cap: similarity.as_ref().map(|s| s.config.word_cap),
    })
}

pub fn height(theta: &[QuadraticReal]) -> CliResult<HeightReport> {
    if theta.is_empty() {
        return Err(CliError::flag("--theta", "at least one value is required"));
    }
    let q = theta
        .iter()
        .map(|t| minkowski_q(&fractional_part(t)))
        .collect::<rmarith_core::Result<Vec<_>>>()
        .map_err(CliError::at("--theta"))?;
    let point = quantum_point(theta).map_err(CliError::at("--theta"))?;
    Ok(HeightReport {
        theta: theta.iter().map(ToString::to_string).collect(),
        question_mark: q.iter().map(ToString::to_string).collect(),
        height: projective_height(&point).to_string(),
        point: point.to_string(),
    })
}

pub fn count(n: usize, tmin: u64, tmax: u64, quantum: bool, threads: usize) -> CliResult<CountReport> {
    if n == 0 {
        return Err(CliError::flag("-n", "dimension must be at least 1"));
    }
    if tmin == 0 || tmax < tmin {
        return Err(CliError::flag("--tmax", format!("need 1 <= tmin <= tmax, got {tmin}..{tmax}")));
    }
    let mut rows = Vec::new();
    for t in doubling_bounds(tmin, tmax) {
        let c = if quantum {
            count_quantum(n, t)?
        } else {
            count_projective_parallel(n, t, threads)
        };
        rows.push(CountRow {
            t,
            count: c as u64,
            log2_count: (c as f64).log2(),
        });
    }
    let pairs: Vec<(u64, usize)> = rows.iter().map(|r| (r.t, r.count as usize)).collect();
    Ok(CountReport {
        n,
        quantum,
        slope: loglog_slope(&pairs),
        rows,
    })
}
