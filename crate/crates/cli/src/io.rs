use std::fmt;
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use pcd_core::{Error, Point};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or configuration; exit code 2.
    Validation(String),
    /// Unreadable or inconsistent input data; exit code 3.
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Data(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "invalid configuration: {m}"),
            CliError::Data(m) => write!(f, "data error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidR(_)
            | Error::InvalidEpsilon(_)
            | Error::InvalidDelta(_)
            | Error::NoClosedForm { .. }
            | Error::Config(_)
            | Error::InvalidWeights(_) => CliError::Validation(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// `sqrtK` becomes `sqrt(K)` so that "sqrt3/8" parses.
fn expand_sqrt(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 4);
    let mut rest = s;
    while let Some(i) = rest.find("sqrt") {
        out.push_str(&rest[..i + 4]);
        rest = &rest[i + 4..];
        let digits = rest.bytes().take_while(|b| b.is_ascii_digit() || *b == b'.').count();
        if digits > 0 {
            out.push('(');
            out.push_str(&rest[..digits]);
            out.push(')');
            rest = &rest[digits..];
        }
    }
    out.push_str(rest);
    out
}

/// Numeric flag value: a decimal, "inf", or an arithmetic expression.
pub fn parse_value(name: &str, s: &str) -> CliResult<f64> {
    let t = s.trim();
    if matches!(t.to_ascii_lowercase().as_str(), "inf" | "infinity") {
        return Ok(f64::INFINITY);
    }
    if let Ok(v) = t.parse::<f64>() {
        return Ok(v);
    }
    let v = exmex::eval_str::<f64>(&expand_sqrt(t)).map_err(|e| CliError::Validation(format!("--{name} {s:?}: {e}")))?;
    if v.is_nan() {
        return Err(CliError::Validation(format!("--{name} {s:?} is not a number")));
    }
    Ok(v)
}

pub fn parse_list(name: &str, items: &[String]) -> CliResult<Vec<f64>> {
    items.iter().map(|s| parse_value(name, s)).collect()
}

/// Two-column x,y CSV. A first row that does not parse as numbers is a header.
pub fn read_points(path: &Path) -> CliResult<Vec<Point>> {
    let file = File::open(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    read_points_from(file).map_err(|e| match e {
        CliError::Data(m) => CliError::Data(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn read_points_from<R: io::Read>(src: R) -> CliResult<Vec<Point>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(src);
    let mut pts = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| CliError::Data(e.to_string()))?;
        if rec.len() != 2 {
            return Err(CliError::Data(format!("row {}: expected 2 columns, found {}", i + 1, rec.len())));
        }
        let parsed = (rec[0].parse::<f64>(), rec[1].parse::<f64>());
        match parsed {
            (Ok(x), Ok(y)) if x.is_finite() && y.is_finite() => pts.push(Point::new(x, y)),
            (Ok(_), Ok(_)) => return Err(CliError::Data(format!("row {}: non-finite coordinate", i + 1))),
            _ if i == 0 => continue,
            _ => return Err(CliError::Data(format!("row {}: cannot parse {:?}", i + 1, rec.iter().collect::<Vec<_>>()))),
        }
    }
    Ok(pts)
}

/// Writes to `out`, or stdout when absent.
pub fn emit(out: Option<&Path>, body: &[u8]) -> CliResult<()> {
    match out {
        Some(p) => std::fs::write(p, body).map_err(|e| CliError::Data(format!("{}: {e}", p.display()))),
        None => {
            let mut h = io::stdout().lock();
            h.write_all(body)?;
            h.flush()?;
            Ok(())
        }
    }
}
