use hardedge_core::{Field, Partition, Rational, Scalar};

use crate::{usage, Failure};

pub fn scalar(flag: &str, s: &str) -> Result<Scalar, Failure> {
    s.parse::<Scalar>().map_err(|e| usage(format!("invalid value for --{flag}: {e}")))
}

pub fn required<'a>(flag: &str, v: &'a Option<String>) -> Result<&'a str, Failure> {
    v.as_deref().ok_or_else(|| usage(format!("--{flag} is required here")))
}

pub fn required_scalar(flag: &str, v: &Option<String>) -> Result<Scalar, Failure> {
    scalar(flag, required(flag, v)?)
}

/// Comma-separated values, sorted ascending and deduplicated.
pub fn list(flag: &str, s: &str) -> Result<Vec<Scalar>, Failure> {
    let mut out = s.split(',').map(|t| scalar(flag, t)).collect::<Result<Vec<_>, _>>()?;
    out.sort_by(|a, b| a.to_f64().total_cmp(&b.to_f64()));
    out.dedup_by(|a, b| a == b);
    Ok(out)
}

pub fn list_or(flag: &str, v: &Option<String>, default: &str) -> Result<Vec<Scalar>, Failure> {
    list(flag, v.as_deref().unwrap_or(default))
}

pub fn usize_list(flag: &str, v: &Option<String>, default: &str) -> Result<Vec<usize>, Failure> {
    let mut out = v
        .as_deref()
        .unwrap_or(default)
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| usage(format!("invalid value {t:?} for --{flag}"))))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn all_exact<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> bool {
    values.into_iter().all(Scalar::is_exact)
}

pub fn field<F: Field>(v: &Scalar) -> Result<F, Failure> {
    Ok(v.to_field()?)
}

pub fn kappa(s: &str) -> Result<Partition, Failure> {
    if s.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| usage(format!("invalid partition part {t:?} in --kappa"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::from_parts(parts)?)
}

/// `lo:hi:step` with exact endpoints; includes `hi` when it lies on the grid.
pub fn grid(s: &str) -> Result<Vec<Rational>, Failure> {
    let bits: Vec<&str> = s.split(':').collect();
    if bits.len() != 3 {
        return Err(usage(format!("--grid expects lo:hi:step, got {s:?}")));
    }
    let exact = |t: &str| -> Result<Rational, Failure> {
        scalar("grid", t)?.as_rational().cloned().ok_or_else(|| usage("--grid needs rational or decimal values"))
    };
    let (lo, hi, step) = (exact(bits[0])?, exact(bits[1])?, exact(bits[2])?);
    if step <= 0 || hi < lo {
        return Err(usage("--grid needs lo <= hi and step > 0"));
    }
    let count = (Rational::from(&hi - &lo) / &step).floor().numer().to_usize().unwrap_or(usize::MAX);
    if count > 1_000_000 {
        return Err(usage("--grid has more than a million points"));
    }
    Ok((0..=count).map(|k| lo.clone() + step.clone() * Rational::from(k as u64)).collect())
}
