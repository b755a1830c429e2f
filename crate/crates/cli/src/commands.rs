use std::fmt::Write as _;
use std::sync::Arc;

use heckeform::exact::{cyclotomic_factorization, CycloNum, LaurentPoly, RationalC};
use heckeform::linalg::Matrix;
use heckeform::specht::{build_specht_specialized, gram_determinant, hermitian_gram, jantzen_layers};
use heckeform::unitarity::{module_for, scan_locus, verdict, verify_theorem, ScanReport, UnitarityVerdict};
use heckeform::{AlgebraSpec, Error, Partition};
use serde::Serialize;

use crate::output::{csv_rows, json, matrix_csv, matrix_pretty};
use crate::{
    parse_c, parse_multipartition, parse_partition, CliError, Format, GramArgs, LocusArgs, PointArgs, Rendered,
    ShapeArgs, VerifyArgs, MAX_VERIFY_N,
};

fn ok(text: String) -> Result<Rendered, CliError> {
    Ok(Rendered { text, agreement: true })
}

#[derive(Serialize)]
struct GramOut<M: Serialize> {
    lambda: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    c: Option<RationalC>,
    dim: usize,
    basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<CycloNum>,
    matrix: M,
}

fn render_gram<C>(out: &GramOut<Matrix<C>>, f: Format) -> Result<String, CliError>
where
    C: heckeform::exact::Coeff + std::fmt::Display + Serialize,
{
    match f {
        Format::Json => json(out),
        Format::Csv => matrix_csv(&out.matrix),
        Format::Pretty => {
            let mut s = format!("λ = {}", out.lambda);
            if let Some(c) = &out.c {
                let _ = write!(s, ", c = {c}");
            }
            if let Some(a) = &out.alpha {
                let _ = write!(s, ", α = {a}");
            }
            let _ = writeln!(s, ", dim = {}", out.dim);
            s.push_str(&matrix_pretty(&out.matrix));
            Ok(s)
        }
    }
}

pub fn gram(a: &GramArgs, f: Format) -> Result<Rendered, CliError> {
    let shape = parse_multipartition(&a.lambda)?;
    let c = a.c.as_deref().map(parse_c).transpose()?;
    if a.hermitian && c.is_none() {
        return Err(CliError::Usage("--hermitian needs --c".into()));
    }
    let text = if shape.level() == 1 {
        if !a.params.is_empty() {
            return Err(CliError::Usage("--params applies to multipartitions only".into()));
        }
        let sd = module_for(&shape.components()[0])?;
        let basis = sd.basis().iter().map(|t| t.to_string()).collect();
        let lambda = shape.to_string();
        match c {
            None => render_gram(
                &GramOut {
                    lambda,
                    c: None,
                    dim: sd.dim(),
                    basis,
                    alpha: None,
                    matrix: sd.gram().clone(),
                },
                f,
            )?,
            Some(c) if a.hermitian => {
                let (alpha, h) = match hermitian_gram(&sd, &c) {
                    Ok(hg) => (Some(hg.alpha), hg.h),
                    // the form vanishes identically
                    Err(Error::Degenerate(_)) => (None, Matrix::zeros(sd.dim(), sd.dim(), &CycloNum::zero(c.conductor()))),
                    Err(e) => return Err(e.into()),
                };
                render_gram(
                    &GramOut {
                        lambda,
                        c: Some(c),
                        dim: sd.dim(),
                        basis,
                        alpha,
                        matrix: h,
                    },
                    f,
                )?
            }
            Some(c) => render_gram(
                &GramOut {
                    lambda,
                    c: Some(c),
                    dim: sd.dim(),
                    basis,
                    alpha: None,
                    matrix: sd.gram().map(|x: &LaurentPoly| x.specialize(&c)),
                },
                f,
            )?,
        }
    } else {
        let Some(c) = c else {
            return Err(CliError::Usage("multipartitions need --c and --params".into()));
        };
        if a.hermitian {
            return Err(CliError::Usage("--hermitian is available for partitions only".into()));
        }
        if a.params.len() != shape.level() {
            return Err(CliError::Usage(format!("--params needs {} values", shape.level())));
        }
        let params = a.params.iter().map(|s| parse_c(s)).collect::<Result<Vec<_>, _>>()?;
        let spec = Arc::new(AlgebraSpec::at_roots_of_unity(shape.size(), &c, &params)?);
        let sd = build_specht_specialized(&shape, &spec)?;
        render_gram(
            &GramOut {
                lambda: shape.to_string(),
                c: Some(c),
                dim: sd.dim(),
                basis: sd.basis().iter().map(|t| t.to_string()).collect(),
                alpha: None,
                matrix: sd.gram().clone(),
            },
            f,
        )?
    };
    if let Some(path) = &a.dump_gram {
        let body = if f == Format::Json { text.clone() } else { gram(&GramArgs { dump_gram: None, ..a.clone() }, Format::Json)?.text };
        std::fs::write(path, body)?;
    }
    ok(text)
}

#[derive(Serialize)]
struct VerdictRow {
    lambda: String,
    c: RationalC,
    e: String,
    status: String,
    pos: usize,
    neg: usize,
    zero: usize,
    dim_d: usize,
}

fn verdict_row(v: &UnitarityVerdict) -> VerdictRow {
    VerdictRow {
        lambda: v.shape.to_string(),
        c: v.c,
        e: v.e.map_or("inf".into(), |e| e.to_string()),
        status: v.status.to_string(),
        pos: v.signature.pos,
        neg: v.signature.neg,
        zero: v.signature.zero,
        dim_d: v.dim_d,
    }
}

pub fn unitary(a: &PointArgs, f: Format) -> Result<Rendered, CliError> {
    let p = parse_partition(&a.lambda)?;
    let c = parse_c(&a.c)?;
    let v = verdict(&p, &c)?;
    ok(match f {
        Format::Json => json(&v)?,
        Format::Csv => csv_rows(&[verdict_row(&v)])?,
        Format::Pretty => format!(
            "λ = {}, c = {}, e = {}: {} (signature {}, dim D = {})\n",
            v.shape,
            v.c,
            v.e.map_or("∞".into(), |e| e.to_string()),
            v.status,
            v.signature,
            v.dim_d
        ),
    })
}

#[derive(Serialize)]
struct PointRow {
    lambda: String,
    c: RationalC,
    status: String,
    pos: usize,
    neg: usize,
    zero: usize,
    predicted: bool,
}

fn point_rows(r: &ScanReport) -> Vec<PointRow> {
    r.points
        .iter()
        .map(|p| PointRow {
            lambda: r.shape.to_string(),
            c: p.c,
            status: p.status.to_string(),
            pos: p.signature.pos,
            neg: p.signature.neg,
            zero: p.signature.zero,
            predicted: p.predicted,
        })
        .collect()
}

fn join<T: std::fmt::Display>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn check_bound(n: usize, bound: u32) -> Result<(), CliError> {
    if (bound as usize) < 2 * n + 2 {
        return Err(CliError::Usage(format!("--bound {bound} is below 2n + 2 = {}", 2 * n + 2)));
    }
    Ok(())
}

pub fn locus(a: &LocusArgs, f: Format) -> Result<Rendered, CliError> {
    let p = parse_partition(&a.lambda)?;
    check_bound(p.size(), a.bound)?;
    let r = scan_locus(&p, a.bound)?;
    let text = match f {
        Format::Json => json(&r)?,
        Format::Csv => csv_rows(&point_rows(&r))?,
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "λ = {}, B = {}", r.shape, r.bound);
            let _ = writeln!(s, "predicted: {}", r.predicted);
            let _ = writeln!(s, "computed members: {}", join(r.members()));
            let _ = writeln!(s, "singular points: {}", join(&r.singular_points));
            let _ = writeln!(s, "tested {} points, agreement {}", r.points.len(), r.agreement);
            if !r.mismatches.is_empty() {
                let _ = writeln!(s, "mismatches: {}", join(&r.mismatches));
            }
            s
        }
    };
    Ok(Rendered {
        text,
        agreement: r.agreement,
    })
}

#[derive(Serialize)]
struct ShapeSummary {
    lambda: String,
    predicted: String,
    tested: usize,
    agreement: bool,
    mismatches: Vec<RationalC>,
}

#[derive(Serialize)]
struct VerifySummary {
    n_max: usize,
    bound: u32,
    shapes: usize,
    points: usize,
    agreement: bool,
    reports: Vec<ShapeSummary>,
}

pub fn verify(a: &VerifyArgs, f: Format) -> Result<Rendered, CliError> {
    if a.n_max < 2 {
        return Err(CliError::Usage("--n-max must be at least 2".into()));
    }
    if a.n_max > MAX_VERIFY_N {
        return Err(CliError::Guard(format!("--n-max {} exceeds the limit {MAX_VERIFY_N}", a.n_max)));
    }
    check_bound(a.n_max, a.bound)?;
    let rep = verify_theorem(a.n_max, a.bound)?;
    let summary = VerifySummary {
        n_max: rep.n_max,
        bound: rep.bound,
        shapes: rep.shapes,
        points: rep.points,
        agreement: rep.agreement,
        reports: rep
            .reports
            .iter()
            .map(|r| ShapeSummary {
                lambda: r.shape.to_string(),
                predicted: r.predicted.to_string(),
                tested: r.points.len(),
                agreement: r.agreement,
                mismatches: r.mismatches.clone(),
            })
            .collect(),
    };
    let text = match f {
        Format::Json => json(&summary)?,
        Format::Csv => csv_rows(&rep.reports.iter().flat_map(point_rows).collect::<Vec<_>>())?,
        Format::Pretty => {
            let mut s = String::new();
            for r in &summary.reports {
                let mark = if r.agreement { "ok" } else { "MISMATCH" };
                let _ = write!(s, "{:<10} {:<40} {:>4} points  {mark}", r.lambda, r.predicted, r.tested);
                if !r.mismatches.is_empty() {
                    let _ = write!(s, " at {}", join(&r.mismatches));
                }
                s.push('\n');
            }
            let _ = writeln!(
                s,
                "n ≤ {}, B = {}: {} shapes, {} points, agreement {}",
                summary.n_max, summary.bound, summary.shapes, summary.points, summary.agreement
            );
            s
        }
    };
    Ok(Rendered {
        text,
        agreement: rep.agreement,
    })
}

#[derive(Serialize)]
struct JantzenOut {
    lambda: String,
    c: RationalC,
    layer_dims: Vec<usize>,
}

pub fn jantzen(a: &PointArgs, f: Format) -> Result<Rendered, CliError> {
    let p = parse_partition(&a.lambda)?;
    let c = parse_c(&a.c)?;
    let rep = jantzen_layers(&module_for(&p)?, &c)?;
    let out = JantzenOut {
        lambda: p.to_string(),
        c,
        layer_dims: rep.layer_dims,
    };
    ok(match f {
        Format::Json => json(&out)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                lambda: String,
                c: RationalC,
                layer_dims: String,
            }
            csv_rows(&[Row {
                lambda: out.lambda.clone(),
                c,
                layer_dims: out.layer_dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(";"),
            }])?
        }
        Format::Pretty => format!("λ = {}, c = {}: layers {:?}\n", out.lambda, c, out.layer_dims),
    })
}

#[derive(Serialize)]
struct Factor {
    e: usize,
    multiplicity: usize,
}

#[derive(Serialize)]
struct DetOut {
    lambda: String,
    det: LaurentPoly,
    factors: Vec<Factor>,
}

fn det_of(p: &Partition) -> Result<DetOut, CliError> {
    let det = gram_determinant(&module_for(p)?);
    let table = cyclotomic_factorization(&det, p.size().max(1))
        .ok_or_else(|| CliError::Core(Error::Internal(format!("determinant {det} is not a product of Φ_e, e ≤ n"))))?;
    Ok(DetOut {
        lambda: p.to_string(),
        det,
        factors: table
            .into_iter()
            .map(|(e, multiplicity)| Factor { e, multiplicity })
            .collect(),
    })
}

pub fn det(a: &ShapeArgs, f: Format) -> Result<Rendered, CliError> {
    let p = parse_partition(&a.lambda)?;
    let out = det_of(&p)?;
    ok(match f {
        Format::Json => json(&out)?,
        Format::Csv => csv_rows(&out.factors)?,
        Format::Pretty => {
            let factors: Vec<String> = out.factors.iter().map(|x| format!("Φ_{}^{}", x.e, x.multiplicity)).collect();
            let unit = if factors.is_empty() { "unit".to_string() } else { factors.join(" · ") };
            format!("λ = {}: det G = {}\n  = unit · {}\n", out.lambda, out.det, unit)
        }
    })
}
