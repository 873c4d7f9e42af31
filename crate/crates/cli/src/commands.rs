use serde::{Serialize, Serializer};
use serde_json::json;

use pcd_core::efficacy::{self, EfficacyReport};
use pcd_core::inference::{asymptotic_test, mc_study, Region};
use pcd_core::moments;
use pcd_core::multitriangle::moments_multi;
use pcd_core::{Alternative, DelaunayMesh, Error, McConfig, Point, ProximityParams, TestReport, Triangle, VERSION};

use crate::args::{AltKind, Curve, CurvesArgs, EfficacyArgs, EfficacyKind, Format, MeshInfoArgs, SimulateArgs, TestArgs};
use crate::io::{emit, parse_list, parse_value, read_points, CliError, CliResult};

/// JSON has no infinity; an infinite r is written as the string "inf".
fn ser_r<S: Serializer>(r: &f64, s: S) -> Result<S::Ok, S::Error> {
    if r.is_infinite() {
        s.serialize_str("inf")
    } else {
        s.serialize_f64(*r)
    }
}

#[derive(Serialize)]
struct RTest {
    #[serde(serialize_with = "ser_r")]
    r: f64,
    #[serde(flatten)]
    report: TestReport,
}

fn envelope<C: Serialize, R: Serialize>(command: &str, config: &C, result: R) -> CliResult<Vec<u8>> {
    let v = json!({ "tool": "pcd", "version": VERSION, "command": command, "config": config, "result": result });
    let mut s = serde_json::to_vec_pretty(&v).map_err(|e| CliError::Data(e.to_string()))?;
    s.push(b'\n');
    Ok(s)
}

/// Leading comment line for CSV output, carrying the same provenance as JSON.
fn csv_preamble<C: Serialize>(command: &str, config: &C) -> CliResult<String> {
    let c = serde_json::to_string(config).map_err(|e| CliError::Data(e.to_string()))?;
    Ok(format!("# pcd {VERSION} {command} {c}\n"))
}

fn alternative(kind: AltKind, eps: Option<&str>) -> CliResult<Alternative> {
    let need = || CliError::Validation(format!("--eps is required for the {kind:?} alternative").to_lowercase());
    Ok(match kind {
        AltKind::Null => Alternative::Null,
        AltKind::Segregation => Alternative::segregation(parse_value("eps", eps.ok_or_else(need)?)?)?,
        AltKind::Association => Alternative::association(parse_value("eps", eps.ok_or_else(need)?)?)?,
    })
}

fn params(r: f64) -> CliResult<ProximityParams> {
    if r.is_infinite() && r > 0.0 {
        Ok(ProximityParams::infinite())
    } else {
        Ok(ProximityParams::new(r)?)
    }
}

fn check_alpha(alpha: f64) -> CliResult<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(CliError::Validation(format!("--alpha must lie in (0, 1), got {alpha}")))
    }
}

fn mesh_from(sites: &[Point]) -> CliResult<DelaunayMesh> {
    if sites.len() < 3 {
        return Err(CliError::Data(format!("need at least 3 reference sites, got {}", sites.len())));
    }
    Ok(DelaunayMesh::triangulate(sites)?)
}

pub fn test(a: &TestArgs) -> CliResult<()> {
    check_alpha(a.alpha)?;
    let rs = parse_list("r", &a.r)?;
    let ps = rs.iter().map(|&r| params(r)).collect::<CliResult<Vec<_>>>()?;
    let sites = read_points(&a.sites)?;
    let mut points = read_points(&a.points)?;
    let n_read = points.len();

    let tri;
    let mesh;
    let region = if sites.len() == 3 {
        tri = Triangle::new(sites[0], sites[1], sites[2]).map_err(|e| CliError::Data(format!("reference sites: {e}")))?;
        Region::Triangle(&tri)
    } else {
        mesh = mesh_from(&sites)?;
        Region::Mesh(&mesh)
    };
    if a.drop_outside {
        points.retain(|&p| match region {
            Region::Triangle(t) => t.contains(p),
            Region::Mesh(m) => m.locate(p).is_some(),
        });
    }
    let reports = rs
        .iter()
        .zip(&ps)
        .map(|(&r, &p)| Ok(RTest { r, report: asymptotic_test(region, p, &points, a.alpha)? }))
        .collect::<CliResult<Vec<_>>>()?;
    let triangles = match region {
        Region::Triangle(_) => 1,
        Region::Mesh(m) => m.len(),
    };
    let result = json!({
        "points_read": n_read,
        "points_used": points.len(),
        "sites": sites.len(),
        "triangles": triangles,
        "tests": reports,
    });
    emit(a.out.as_deref(), &envelope("test", a, result)?)
}

pub fn simulate(a: &SimulateArgs) -> CliResult<()> {
    if a.samples && a.format == Format::Csv {
        return Err(CliError::Validation("--samples is only available with --format json".into()));
    }
    let cfg = McConfig {
        n: a.n,
        replicates: a.replicates,
        r: parse_value("r", &a.r)?,
        alt: alternative(a.alt, a.eps.as_deref())?,
        alpha: a.alpha,
        seed: a.seed,
        use_asymptotic_cv: a.use_asymptotic_cv,
    };
    cfg.validate()?;
    let res = mc_study(&cfg)?;
    let body = match a.format {
        Format::Json => {
            let mut result = json!({
                "critical_value": res.critical_value,
                "empirical_alpha": res.empirical_alpha,
                "empirical_power": res.empirical_power,
                "lower_tail": cfg.lower_tail(),
            });
            if a.samples {
                result["density_samples"] = json!(res.density_samples);
            }
            envelope("simulate", &json!({ "args": a, "resolved": cfg }), result)?
        }
        Format::Csv => {
            let mut s = csv_preamble("simulate", &json!({ "args": a, "resolved": cfg }))?;
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["alt", "eps", "r", "n", "replicates", "alpha", "seed", "critical_value", "empirical_alpha", "empirical_power"])
                .map_err(|e| CliError::Data(e.to_string()))?;
            let eps = cfg.alt.epsilon().map(|e| e.to_string()).unwrap_or_default();
            w.serialize((
                format!("{:?}", a.alt).to_lowercase(),
                eps,
                cfg.r,
                cfg.n,
                cfg.replicates,
                cfg.alpha,
                cfg.seed,
                res.critical_value,
                res.empirical_alpha,
                res.empirical_power,
            ))
            .map_err(|e| CliError::Data(e.to_string()))?;
            s.push_str(&String::from_utf8(w.into_inner().map_err(|e| CliError::Data(e.to_string()))?).expect("csv output is UTF-8"));
            s.into_bytes()
        }
    };
    emit(a.out.as_deref(), &body)
}

fn grid(a: &CurvesArgs) -> CliResult<Vec<f64>> {
    if !a.r.is_empty() {
        return parse_list("r", &a.r);
    }
    let (lo, hi, step) = (parse_value("from", &a.from)?, parse_value("to", &a.to)?, parse_value("step", &a.step)?);
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(CliError::Validation(format!("bad grid [{lo}, {hi}]")));
    }
    if !(step > 0.0) {
        return Err(CliError::Validation(format!("--step must be positive, got {step}")));
    }
    let k = ((hi - lo) / step + 1e-9).floor() as usize;
    if k > 10_000_000 {
        return Err(CliError::Validation("grid has more than 1e7 points".into()));
    }
    Ok((0..=k).map(|i| lo + i as f64 * step).collect())
}

/// Errors that make the whole curve meaningless, as opposed to a value that
/// is undefined at one r.
fn fatal(e: &Error) -> bool {
    matches!(e, Error::NoClosedForm { .. } | Error::InvalidEpsilon(_) | Error::Config(_) | Error::InvalidR(_) | Error::TooFewPoints(_))
}

fn cell(v: pcd_core::Result<f64>) -> CliResult<String> {
    match v {
        Ok(x) if x.is_finite() => Ok(x.to_string()),
        Ok(x) => Ok(if x > 0.0 { "inf".into() } else { String::new() }),
        Err(e) if fatal(&e) => Err(e.into()),
        Err(_) => Ok(String::new()),
    }
}

pub fn curves(a: &CurvesArgs) -> CliResult<()> {
    if a.which.is_empty() {
        return Err(CliError::Validation("--which is empty".into()));
    }
    let rs = grid(a)?;
    let needs_alt = a.which.iter().any(|c| matches!(c, Curve::Hlae | Curve::Power));
    let alt = match a.alt {
        Some(k) => alternative(k, a.eps.as_deref())?,
        None if needs_alt => return Err(CliError::Validation("hlae and power need --alt and --eps".into())),
        None => Alternative::Null,
    };
    if needs_alt && alt == Alternative::Null {
        return Err(CliError::Validation("hlae and power need a segregation or association alternative".into()));
    }
    if a.which.contains(&Curve::Power) {
        check_alpha(a.alpha)?;
    }
    let mut header = vec!["r".to_string()];
    for c in &a.which {
        match c {
            Curve::Pae => header.extend(["pae_seg".into(), "pae_assoc".into()]),
            other => header.push(format!("{other:?}").to_lowercase()),
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Data(e.to_string());
    w.write_record(&header).map_err(csv_err)?;
    for &r in &rs {
        params(r)?;
        let mut row = vec![r.to_string()];
        for c in &a.which {
            match c {
                Curve::Mu => row.push(cell(moments::mu_null(r).map(|m| m.value))?),
                Curve::Nu => row.push(cell(moments::nu_null(r).map(|m| m.value))?),
                Curve::Omega => row.push(cell(moments::omega_var_h(r).map(|m| m.value))?),
                Curve::Pae => {
                    row.push(cell(efficacy::pae_seg(r))?);
                    row.push(cell(efficacy::pae_assoc(r))?);
                }
                Curve::Hlae => row.push(cell(efficacy::hlae(r, &alt).map(|h| h.value))?),
                Curve::Power => row.push(cell(match alt {
                    Alternative::Segregation { eps } => efficacy::power_seg(r, a.n, eps, a.alpha),
                    Alternative::Association { eps } => efficacy::power_assoc(r, a.n, eps, a.alpha),
                    Alternative::Null => unreachable!("checked above"),
                })?),
            }
        }
        w.write_record(&row).map_err(csv_err)?;
    }
    let mut s = csv_preamble("curves", a)?;
    s.push_str(&String::from_utf8(w.into_inner().map_err(|e| CliError::Data(e.to_string()))?).expect("csv output is UTF-8"));
    emit(a.out.as_deref(), s.as_bytes())
}

#[derive(Serialize)]
struct PaeValue {
    #[serde(serialize_with = "ser_r")]
    r: f64,
    value: f64,
}

pub fn efficacy(a: &EfficacyArgs) -> CliResult<()> {
    let rs = parse_list("r", &a.r)?;
    for &r in &rs {
        params(r)?;
    }
    let weights = match &a.sites {
        Some(p) => Some(mesh_from(&read_points(p)?)?.weights),
        None => None,
    };
    let result = match a.kind {
        EfficacyKind::Pae => {
            let seg = match a.alt {
                AltKind::Segregation => true,
                AltKind::Association => false,
                AltKind::Null => return Err(CliError::Validation("pae needs --alt segregation or association".into())),
            };
            let vals = rs
                .iter()
                .map(|&r| {
                    let value = match &weights {
                        Some(w) => efficacy::pae_multi(r, w, seg)?,
                        None if seg => efficacy::pae_seg(r)?,
                        None => efficacy::pae_assoc(r)?,
                    };
                    Ok(PaeValue { r, value })
                })
                .collect::<CliResult<Vec<_>>>()?;
            json!({ "kind": if seg { "pae_s" } else { "pae_a" }, "values": vals, "weights": weights })
        }
        EfficacyKind::Hlae => {
            let alt = alternative(a.alt, a.eps.as_deref())?;
            if alt == Alternative::Null {
                return Err(CliError::Validation("hlae needs --alt segregation or association".into()));
            }
            let vals = rs
                .iter()
                .map(|&r| match &weights {
                    Some(w) => efficacy::hlae_multi(r, &alt, w),
                    None => efficacy::hlae(r, &alt),
                })
                .collect::<Result<Vec<EfficacyReport>, _>>()?;
            json!({ "kind": "hlae", "values": vals })
        }
    };
    emit(a.out.as_deref(), &envelope("efficacy", a, result)?)
}

#[derive(Serialize)]
struct NullMoments {
    #[serde(serialize_with = "ser_r")]
    r: f64,
    mu: f64,
    nu: f64,
}

pub fn mesh_info(a: &MeshInfoArgs) -> CliResult<()> {
    let rs = parse_list("r", &a.r)?;
    for &r in &rs {
        params(r)?;
    }
    let sites = read_points(&a.sites)?;
    let mesh = mesh_from(&sites)?;
    let moments = rs
        .iter()
        .map(|&r| {
            let (mu, nu) = moments_multi(r, &mesh.weights)?;
            Ok(NullMoments { r, mu, nu })
        })
        .collect::<CliResult<Vec<_>>>()?;
    let result = json!({
        "sites": sites.len(),
        "triangles": mesh.triangles,
        "weights": mesh.weights,
        "hull_area": mesh.hull_area(),
        "max_circumcircle_violation": mesh.max_circumcircle_violation(),
        "null_moments": moments,
    });
    emit(a.out.as_deref(), &envelope("mesh-info", a, result)?)
}
