use serde_json::{json, Value};

use twinbuild::building::{
    codelta, decode_coords, delta, encode_coords, opposite, project, project_twin, Chamber,
};
use twinbuild::cells::{bott_series, bruhat_covers, loop_poincare, schubert_poincare, PoincareSeries};
use twinbuild::coxeter::{affine_to_word, bruhat_leq, min_coset_reps, reduce, AffineWeylElt};
use twinbuild::exactalg::{matrix_to_strings, GaussRat, LaurentMatrix, QMat};
use twinbuild::lattice::Side;
use twinbuild::veronese::{
    barycentric_affine_veronese, caveat_check, recover_flag_with_weights, spherical_veronese, Subspace,
    SubspaceFlag,
};
use twinbuild::verify::{run_suite, SUITES};

use crate::input;
use crate::{CliError, Cmd, CoordsCmd, CoxeterCmd, Outcome, PairArgs, PoincareCmd, ProjectArgs, VeroneseCmd};

/// Matrix inputs echo in printed form when they parse, verbatim otherwise.
fn echo_matrix(s: &Option<String>) -> Value {
    match s {
        None => Value::Null,
        Some(s) => match s.parse::<LaurentMatrix>() {
            Ok(m) => json!(m.to_string()),
            Err(_) => json!(s),
        },
    }
}

/// Command name and its parameters as JSON.
pub fn describe(cmd: &Cmd) -> (String, Value) {
    match cmd {
        Cmd::Coxeter(c) => match c {
            CoxeterCmd::Reduce { ty, word } => ("coxeter reduce".into(), json!({ "type": ty, "word": word })),
            CoxeterCmd::Length { ty, word } => ("coxeter length".into(), json!({ "type": ty, "word": word })),
            CoxeterCmd::Bruhat { ty, v, w } => ("coxeter bruhat".into(), json!({ "type": ty, "v": v, "w": w })),
            CoxeterCmd::Cosets { ty, within, quotient, max_len } => (
                "coxeter cosets".into(),
                json!({ "type": ty, "within": within, "quotient": quotient, "max_len": max_len }),
            ),
        },
        Cmd::Delta(p) => ("delta".into(), pair_params(p)),
        Cmd::Codelta(p) => ("codelta".into(), pair_params(p)),
        Cmd::Opposite(p) => ("opposite".into(), pair_params(p)),
        Cmd::Project(p) => ("project".into(), project_params(p)),
        Cmd::ProjectTwin(p) => ("project-twin".into(), project_params(p)),
        Cmd::Coords(c) => match c {
            CoordsCmd::Encode { n, c0, d0, e, word } => (
                "coords encode".into(),
                json!({ "n": n, "c0": echo_matrix(c0), "d0": echo_matrix(d0), "e": echo_matrix(&Some(e.clone())), "word": word }),
            ),
            CoordsCmd::Decode { n, c0, d0, word, coords } => (
                "coords decode".into(),
                json!({ "n": n, "c0": echo_matrix(c0), "d0": echo_matrix(d0), "word": word, "coords": coords }),
            ),
        },
        Cmd::Poincare(p) => match p {
            PoincareCmd::Schubert { ty, quotient, w, deg } => (
                "poincare schubert".into(),
                json!({ "type": ty, "quotient": quotient, "w": w, "deg": deg }),
            ),
            PoincareCmd::Loop { n, deg } => ("poincare loop".into(), json!({ "n": n, "deg": deg })),
            PoincareCmd::BottCheck { k, deg } => ("poincare bott-check".into(), json!({ "k": k, "deg": deg })),
        },
        Cmd::Veronese(v) => match v {
            VeroneseCmd::Spherical { flag, weights } => {
                ("veronese spherical".into(), json!({ "flag": flag, "weights": weights }))
            }
            VeroneseCmd::Recover { x } => ("veronese recover".into(), json!({ "x": echo_matrix(&Some(x.clone())) })),
            VeroneseCmd::Affine { g, k, weights } => (
                "veronese affine".into(),
                json!({ "g": echo_matrix(&Some(g.clone())), "k": k, "weights": weights }),
            ),
            VeroneseCmd::Caveat { n, window } => ("veronese caveat".into(), json!({ "n": n, "window": window })),
        },
        Cmd::Verify { suite, seed } => ("verify".into(), json!({ "suite": suite, "seed": seed })),
    }
}

fn pair_params(p: &PairArgs) -> Value {
    json!({ "n": p.n, "side": p.side, "c": echo_matrix(&p.c), "d": echo_matrix(&p.d) })
}

fn project_params(p: &ProjectArgs) -> Value {
    json!({ "n": p.n, "side": p.side, "x": echo_matrix(&p.x), "types": p.types, "c": echo_matrix(&p.c) })
}

pub fn run(cmd: &Cmd) -> Result<Outcome, CliError> {
    match cmd {
        Cmd::Coxeter(c) => coxeter(c),
        Cmd::Delta(p) => {
            let side = p.side.as_deref().map_or(Ok(Side::Plus), input::side)?;
            let c = input::chamber(p.c.as_deref(), side, p.n, "c")?;
            let d = input::chamber(p.d.as_deref(), side, p.n, "d")?;
            Ok(weyl_outcome(&delta(&c, &d)?))
        }
        Cmd::Codelta(p) => {
            let (c, d) = twin_pair(p)?;
            Ok(weyl_outcome(&codelta(&c, &d)?))
        }
        Cmd::Opposite(p) => {
            let (c, d) = twin_pair(p)?;
            let o = opposite(&c, &d)?;
            Ok(Outcome::new(json!({ "opposite": o }), o.to_string()))
        }
        Cmd::Project(p) => projection(p, false),
        Cmd::ProjectTwin(p) => projection(p, true),
        Cmd::Coords(c) => coords(c),
        Cmd::Poincare(p) => poincare(p),
        Cmd::Veronese(v) => veronese(v),
        Cmd::Verify { suite, seed } => verify(suite, *seed),
    }
}

fn words(ws: &[twinbuild::coxeter::Word]) -> Vec<String> {
    ws.iter().map(|w| w.to_string()).collect()
}

fn coxeter(c: &CoxeterCmd) -> Result<Outcome, CliError> {
    match c {
        CoxeterCmd::Reduce { ty, word } => {
            let cm = input::coxeter(ty)?;
            let r = reduce(&input::word(word)?, &cm)?;
            Ok(Outcome::new(
                json!({ "word": r.to_string(), "pretty": r.pretty(), "length": r.len() }),
                r.pretty(),
            ))
        }
        CoxeterCmd::Length { ty, word } => {
            let cm = input::coxeter(ty)?;
            let l = reduce(&input::word(word)?, &cm)?.len();
            Ok(Outcome::new(json!({ "length": l }), l.to_string()))
        }
        CoxeterCmd::Bruhat { ty, v, w } => {
            let cm = input::coxeter(ty)?;
            let leq = bruhat_leq(&input::word(v)?, &input::word(w)?, &cm)?;
            Ok(Outcome::new(json!({ "leq": leq }), leq.to_string()))
        }
        CoxeterCmd::Cosets { ty, within, quotient, max_len } => {
            let mut cm = input::coxeter(ty)?;
            if let Some(k) = within {
                cm = cm.restrict(&input::labels(k)?)?;
            }
            let j = input::labels(quotient)?;
            let reps = min_coset_reps(&cm, &j, *max_len)?;
            let covers = bruhat_covers(&cm, &reps)?;
            let shown = words(&reps);
            let cover_pairs: Vec<[String; 2]> =
                covers.iter().map(|&(a, b)| [shown[a].clone(), shown[b].clone()]).collect();
            let mut text: Vec<String> = reps.iter().map(|r| format!("{} (length {})", r.pretty(), r.len())).collect();
            text.extend(covers.iter().map(|&(a, b)| format!("{} -> {}", reps[a].pretty(), reps[b].pretty())));
            Ok(Outcome::new(
                json!({
                    "representatives": shown,
                    "lengths": reps.iter().map(|r| r.len()).collect::<Vec<_>>(),
                    "covers": cover_pairs,
                }),
                text.join("\n"),
            ))
        }
    }
}

fn weyl_json(w: &AffineWeylElt) -> Value {
    let word = affine_to_word(w);
    json!({ "word": word.to_string(), "window": w.window(), "length": w.length() })
}

fn weyl_outcome(w: &AffineWeylElt) -> Outcome {
    Outcome::new(weyl_json(w), affine_to_word(w).pretty())
}

/// `C` on `--side` (minus by default), `D` on the other side.
fn twin_pair(p: &PairArgs) -> Result<(Chamber, Chamber), CliError> {
    let side = p.side.as_deref().map_or(Ok(Side::Minus), input::side)?;
    let c = input::chamber(p.c.as_deref(), side, p.n, "c")?;
    let d = input::chamber(p.d.as_deref(), side.opposite(), p.n, "d")?;
    Ok((c, d))
}

fn chamber_json(c: &Chamber) -> Value {
    let verts: Vec<Value> = c
        .vertices()
        .iter()
        .map(|v| json!({ "type": v.ty, "lattice": matrix_to_strings(v.class.rep()) }))
        .collect();
    json!({ "side": c.side().to_string(), "rep": matrix_to_strings(c.rep()), "vertices": verts })
}

fn chamber_outcome(c: &Chamber) -> Outcome {
    Outcome::new(chamber_json(c), format!("{} {}", c.side(), c.rep()))
}

fn projection(p: &ProjectArgs, twin: bool) -> Result<Outcome, CliError> {
    let side = input::side(&p.side)?;
    let x = input::chamber(p.x.as_deref(), side, p.n, "x")?;
    let simplex = x.face(&input::labels(&p.types)?)?;
    let c_side = if twin { side.opposite() } else { side };
    let c = input::chamber(p.c.as_deref(), c_side, p.n, "c")?;
    let gate = if twin { project_twin(&simplex, &c)? } else { project(&simplex, &c)? };
    Ok(chamber_outcome(&gate))
}

fn coords(c: &CoordsCmd) -> Result<Outcome, CliError> {
    match c {
        CoordsCmd::Encode { n, c0, d0, e, word } => {
            let e = input::chamber(Some(e), Side::Plus, *n, "e")?;
            let n = Some(e.n());
            let c0 = input::chamber(c0.as_deref(), Side::Plus, n, "c0")?;
            let d0 = input::chamber(d0.as_deref(), Side::Minus, n, "d0")?;
            let word = match word {
                Some(w) => input::word(w)?,
                None => affine_to_word(&delta(&c0, &e)?),
            };
            let coords = encode_coords(&c0, &d0, &e, &word)?;
            let shown: Vec<String> = coords.iter().map(|t| t.to_string()).collect();
            Ok(Outcome::new(
                json!({ "word": word.to_string(), "coords": shown }),
                shown.join(", "),
            ))
        }
        CoordsCmd::Decode { n, c0, d0, word, coords } => {
            let c0 = input::chamber(c0.as_deref(), Side::Plus, *n, "c0")?;
            let d0 = input::chamber(d0.as_deref(), Side::Minus, Some(c0.n()), "d0")?;
            let coords: Vec<GaussRat> = input::scalars(coords)?;
            let e = decode_coords(&c0, &d0, &input::word(word)?, &coords)?;
            Ok(chamber_outcome(&e))
        }
    }
}

fn series_json(s: &PoincareSeries) -> Value {
    json!({ "coeffs": s.coeffs, "truncation": s.truncation, "series": s.to_string() })
}

fn poincare(p: &PoincareCmd) -> Result<Outcome, CliError> {
    match p {
        PoincareCmd::Schubert { ty, quotient, w, deg } => {
            let cm = input::coxeter(ty)?;
            let s = schubert_poincare(&cm, &input::labels(quotient)?, &input::word(w)?, *deg)?;
            Ok(Outcome::new(series_json(&s), s.to_string()))
        }
        PoincareCmd::Loop { n, deg } => {
            let s = loop_poincare(*n, *deg)?;
            Ok(Outcome::new(series_json(&s), s.to_string()))
        }
        PoincareCmd::BottCheck { k, deg } => {
            let (g, a) = bott_series(*k, *deg)?;
            let equal = (0..=*deg).all(|d| g.coeff(d) == a.coeff(d));
            let text = format!("{equal}\nGr: {g}\nV:  {a}");
            Ok(Outcome::new(
                json!({ "equal": equal, "grassmannian": series_json(&g), "affine": series_json(&a) }),
                text,
            ))
        }
    }
}

fn qmat_json(m: &QMat) -> Value {
    let rows: Vec<Vec<String>> = (0..m.nrows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect();
    json!(rows)
}

fn qmat_text(m: &QMat) -> String {
    m.to_laurent().to_string()
}

fn veronese(v: &VeroneseCmd) -> Result<Outcome, CliError> {
    match v {
        VeroneseCmd::Spherical { flag, weights } => {
            let parts = input::flag_parts(flag)?;
            let n = parts
                .first()
                .and_then(|p| p.first())
                .map(|v| v.len())
                .ok_or_else(|| CliError::Usage("empty flag".into()))?;
            let subspaces = parts
                .iter()
                .map(|p| Subspace::span(n, p))
                .collect::<Result<Vec<_>, _>>()?;
            let flag = SubspaceFlag::new(subspaces)?;
            let w = match weights {
                Some(w) => input::rationals(w)?,
                None => {
                    let k = flag.parts().len() as i64;
                    vec![num_rational::BigRational::new(1.into(), k.into()); flag.parts().len()]
                }
            };
            let x = spherical_veronese(&flag, &w)?;
            Ok(Outcome::new(json!({ "n": n, "types": flag.types(), "x": qmat_json(&x) }), qmat_text(&x)))
        }
        VeroneseCmd::Recover { x } => {
            let m = input::matrix(x)?;
            if !m.is_constant() {
                return Err(twinbuild::error::Error::NonConstant.into());
            }
            let (flag, w) = recover_flag_with_weights(&QMat::from_laurent_const(&m))?;
            let parts: Vec<Value> = flag.parts().iter().map(|s| qmat_json(s.basis())).collect();
            let ws: Vec<String> = w.iter().map(|q| q.to_string()).collect();
            let text = format!("types {:?}, weights {}", flag.types(), ws.join(", "));
            Ok(Outcome::new(json!({ "types": flag.types(), "weights": ws, "parts": parts }), text))
        }
        VeroneseCmd::Affine { g, k, weights } => {
            let g = input::matrix(g)?;
            let w = match (k, weights) {
                (Some(k), _) => vec![(*k, num_rational::BigRational::from_integer(1.into()))],
                (None, Some(w)) => input::vertex_weights(w)?,
                (None, None) => return Err(CliError::Usage("give --k or --weights".into())),
            };
            let x = barycentric_affine_veronese(&g, &w)?;
            Ok(Outcome::new(json!({ "x": matrix_to_strings(&x) }), x.to_string()))
        }
        VeroneseCmd::Caveat { n, window } => {
            if *n < 2 {
                return Err(CliError::Usage(format!("--n {n}: need n >= 2")));
            }
            let none = caveat_check(*n, *window);
            Ok(Outcome::new(json!({ "no_truncated_eigenvector": none }), none.to_string()))
        }
    }
}

fn verify(suite: &str, seed: u64) -> Result<Outcome, CliError> {
    let names: Vec<&str> = match suite {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        s => return Err(CliError::Usage(format!("unknown suite '{s}'; one of all, {}", SUITES.join(", ")))),
    };
    let reports: Vec<_> = names.iter().map(|s| run_suite(s, seed).expect("known suite")).collect();
    let ok = reports.iter().all(|r| r.ok());
    let json_reports: Vec<Value> = reports
        .iter()
        .map(|r| json!({ "name": r.name, "cases": r.cases, "passed": r.passed(), "failures": r.failures }))
        .collect();
    let mut lines = Vec::new();
    for r in &reports {
        lines.push(r.to_string());
        lines.extend(r.failures.iter().map(|f| format!("  {f}")));
    }
    Ok(Outcome {
        result: json!({ "seed": seed, "ok": ok, "suites": json_reports }),
        text: lines.join("\n"),
        failed: !ok,
    })
}
