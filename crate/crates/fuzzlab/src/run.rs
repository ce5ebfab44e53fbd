use crate::{CliError, Result, RunConfig};
use compactness::{instances, Family};
use dpmetric::{dp_distance_detail, modulus_report, sig9, PNorm};
use levelset::{classify, from_json, FuzzySet};
use std::fs;
use std::path::Path;

const USAGE: &str = "usage: fuzzlab <command> [args] [flags]
commands:
  dist A.json B.json        print d_p between two fuzzy-set files
  dist FAMILY.json          write the pairwise distance matrix CSV
  modulus FAMILY.json       modulus curves and (eps, delta) certificates
  diagnose FAMILY.json      totally-boundedness diagnostics
  net FAMILY.json           greedy epsilon-net (first --eps value)
  classify FILE.json        space-taxonomy labels (family or single set)
  example ma|wz71|spike     write a generated family (--n members)
  kuratowski FAMILY.json    set limits of the cuts at --alpha
  diagonal FAMILY.json      subsequence limit of the member sequence
flags: --p --grid --alpha-min --tol --out --seed --eps --n --alpha --r-max --cauchy-tol";

pub fn dispatch(args: &[String]) -> Result<()> {
    let Some(command) = args.first() else {
        return Err(CliError::Usage(USAGE.into()));
    };
    let mut cfg = RunConfig::default();
    let positional = cfg.parse(&args[1..])?;
    match command.as_str() {
        "dist" => cmd_dist(&cfg, &positional),
        "modulus" => cmd_modulus(&cfg, &positional),
        "diagnose" => cmd_diagnose(&cfg, &positional),
        "net" => cmd_net(&cfg, &positional),
        "classify" => cmd_classify(&cfg, &positional),
        "example" => cmd_example(&cfg, &positional),
        "kuratowski" => cmd_kuratowski(&cfg, &positional),
        "diagonal" => cmd_diagonal(&cfg, &positional),
        "help" | "--help" => {
            println!("{USAGE}");
            Ok(())
        }
        other => Err(CliError::Usage(format!("unknown command {other}\n{USAGE}"))),
    }
}

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {path}: {e}")))
}

fn load_fuzzy(path: &str) -> Result<FuzzySet> {
    from_json(&read(path)?).map_err(|e| CliError::Validation(format!("{path}: {e}")))
}

fn load_family(path: &str) -> Result<Family> {
    Family::from_json(&read(path)?).map_err(|e| CliError::Validation(format!("{path}: {e}")))
}

fn write_out(cfg: &RunConfig, name: &str, contents: &str) -> Result<()> {
    fs::create_dir_all(&cfg.output_dir)?;
    let path = cfg.output_dir.join(name);
    fs::write(&path, contents)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn pnorm(cfg: &RunConfig) -> Result<PNorm> {
    Ok(PNorm::new(cfg.p)?)
}

fn cmd_dist(cfg: &RunConfig, positional: &[String]) -> Result<()> {
    match positional {
        [a, b] => {
            let u = load_fuzzy(a)?;
            let v = load_fuzzy(b)?;
            let detail = dp_distance_detail(&u, &v, pnorm(cfg)?)?;
            println!("d_p = {}", sig9(detail.value));
            println!(
                "p = {}  merged_levels = {}  floor_mass = {}  floor_integrand = {}",
                sig9(cfg.p),
                detail.merged_levels,
                sig9(detail.floor_mass),
                sig9(detail.floor_integrand),
            );
            Ok(())
        }
        [family_path] => {
            let family = load_family(family_path)?;
            let matrix = dpmetric::distance_matrix(family.members(), family.p())?;
            write_out(cfg, "distance_matrix.csv", &dpmetric::matrix_csv(family.ids(), &matrix))
        }
        _ => Err(CliError::Usage(
            "dist needs two fuzzy-set files or one family file".into(),
        )),
    }
}

fn cmd_modulus(cfg: &RunConfig, positional: &[String]) -> Result<()> {
    let [path] = positional else {
        return Err(CliError::Usage("modulus needs one family file".into()));
    };
    let family = load_family(path)?;
    let h_grid = dpmetric::default_h_grid();
    let mut reports = Vec::new();
    for (u, id) in family.members().iter().zip(family.ids()) {
        let rep = modulus_report(u, id, &h_grid, family.p(), &cfg.eps_list)?;
        write_out(
            cfg,
            &format!("modulus_{id}.csv"),
            &dpmetric::modulus_csv(&rep),
        )?;
        reports.push(rep);
    }
    let json = serde_json::to_string_pretty(&reports)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    write_out(cfg, "modulus_report.json", &json)
}

fn cmd_diagnose(cfg: &RunConfig, positional: &[String]) -> Result<()> {
    let [path] = positional else {
        return Err(CliError::Usage("diagnose needs one family file".into()));
    };
    let family = load_family(path)?;
    let report = compactness::diagnose(&family, &cfg.eps_list, None)?;
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    write_out(cfg, "diagnose_report.json", &json)?;
    write_out(
        cfg,
        "eps_delta.csv",
        &dpmetric::eps_delta_csv(&report.eps_delta_table()),
    )?;
    println!("verdict = {:?}", report.verdict);
    println!("bound_m = {}", sig9(report.bound_m));
    for entry in &report.equi {
        match (&entry.delta, &entry.witness) {
            (Some(d), _) => println!("eps {} -> delta {}", sig9(entry.eps), sig9(*d)),
            (None, Some(w)) => println!(
                "eps {} -> FAIL at member {} h = {} omega = {}",
                sig9(entry.eps),
                w.member_id,
                sig9(w.h),
                sig9(w.omega)
            ),
            (None, None) => {}
        }
    }
    Ok(())
}

fn cmd_net(cfg: &RunConfig, positional: &[String]) -> Result<()> {
    let [path] = positional else {
        return Err(CliError::Usage("net needs one family file".into()));
    };
    let eps = *cfg
        .eps_list
        .first()
        .ok_or_else(|| CliError::Usage("net needs --eps".into()))?;
    let family = load_family(path)?;
    let net = compactness::epsilon_net(&family, eps)?;
    let json =
        serde_json::to_string_pretty(&net).map_err(|e| CliError::Validation(e.to_string()))?;
    write_out(cfg, "net_result.json", &json)?;
    println!("centers = {}  radius = {}", net.center_ids.len(), sig9(net.radius));
    Ok(())
}

fn cmd_classify(cfg: &RunConfig, positional: &[String]) -> Result<()> {
    let [path] = positional else {
        return Err(CliError::Usage("classify needs one file".into()));
    };
    let text = read(path)?;
    let entries: Vec<(String, FuzzySet)> = match Family::from_json(&text) {
        Ok(family) => family
            .ids()
            .iter()
            .cloned()
            .zip(family.members().iter().cloned())
            .collect(),
        Err(_) => {
            let u =
                from_json(&text).map_err(|e| CliError::Validation(format!("{path}: {e}")))?;
            vec![("0".to_string(), u)]
        }
    };
    let mut rows = Vec::new();
    for (id, u) in &entries {
        let class = classify(u);
        println!("{id} {:?}", class.label);
        rows.push(serde_json::json!({ "id": id, "class": class }));
    }
    let json = serde_json::to_string_pretty(&rows)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    write_out(cfg, "classify_report.json", &json)
}

fn cmd_example(cfg: &RunConfig, positional: &[String]) -> Result<()> {
    let [name] = positional else {
        return Err(CliError::Usage("example needs a name: ma | wz71 | spike".into()));
    };
    let p = pnorm(cfg)?;
    match name.as_str() {
        "ma" => {
            let grid = instances::decay_grid(cfg.grid_size, 12);
            let family = instances::decay_family(cfg.n, &grid, p);
            for (u, id) in family.members().iter().zip(family.ids()) {
                write_out(cfg, &format!("ma_{id}.json"), &levelset::to_json(u))?;
            }
            write_out(
                cfg,
                "ma_limit.json",
                &levelset::to_json(&instances::decay_limit(&grid)),
            )?;
            write_out(cfg, "ma_family.json", &family.to_json())
        }
        "wz71" => {
            let grid = instances::parity_grid(64, 24);
            let family = instances::parity_family(cfg.n, &grid, p);
            for (u, id) in family.members().iter().zip(family.ids()) {
                write_out(cfg, &format!("wz71_{id}.json"), &levelset::to_json(u))?;
            }
            write_out(
                cfg,
                "wz71_u0.json",
                &levelset::to_json(&instances::parity_limit(&grid)),
            )?;
            write_out(cfg, "wz71_v.json", &levelset::to_json(&instances::parity_v(&grid)))?;
            write_out(cfg, "wz71_w.json", &levelset::to_json(&instances::parity_w(&grid)))?;
            write_out(cfg, "wz71_family.json", &family.to_json())
        }
        "spike" => {
            let family = instances::spike_family(cfg.n, p);
            for (u, id) in family.members().iter().zip(family.ids()) {
                write_out(cfg, &format!("spike_{id}.json"), &levelset::to_json(u))?;
            }
            write_out(cfg, "spike_family.json", &family.to_json())
        }
        other => Err(CliError::Usage(format!(
            "unknown example {other}; available: ma, wz71, spike"
        ))),
    }
}

fn cmd_kuratowski(cfg: &RunConfig, positional: &[String]) -> Result<()> {
    let [path] = positional else {
        return Err(CliError::Usage("kuratowski needs one family file".into()));
    };
    let family = load_family(path)?;
    let mut seq = Vec::with_capacity(family.len());
    for m in family.members() {
        seq.push(
            m.cut(cfg.alpha)
                .map_err(|e| CliError::Validation(e.to_string()))?
                .clone(),
        );
    }
    let result = setgeom::kuratowski(&seq, cfg.tolerance)?;
    let json = serde_json::json!({
        "dim": result.dim,
        "tolerance": result.tolerance,
        "liminf": result.liminf,
        "limsup": result.limsup,
    });
    let text = serde_json::to_string_pretty(&json)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    write_out(cfg, "kuratowski.json", &text)?;
    println!(
        "liminf points = {}  limsup points = {}  tolerance = {}",
        result.liminf.len(),
        result.limsup.len(),
        sig9(result.tolerance)
    );
    Ok(())
}

fn cmd_diagonal(cfg: &RunConfig, positional: &[String]) -> Result<()> {
    let [path] = positional else {
        return Err(CliError::Usage("diagonal needs one family file".into()));
    };
    let family = load_family(path)?;
    let grid: Vec<f64> = family.members()[0].grid().levels().to_vec();
    let result = compactness::diagonal_limit(&family, &grid, cfg.cauchy_tol)?;
    write_out(cfg, "diagonal_limit.json", &levelset::to_json(&result.limit))?;
    let summary = serde_json::to_string_pretty(&result.summary())
        .map_err(|e| CliError::Validation(e.to_string()))?;
    write_out(cfg, "diagonal_summary.json", &summary)?;
    println!(
        "subsequence = {} members  forced_levels = {}",
        result.subsequence.len(),
        result.forced_levels.len()
    );
    Ok(())
}

/// Writes `contents` to `path` (used by tests to stage inputs).
pub fn stage_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, contents)?;
    Ok(())
}
