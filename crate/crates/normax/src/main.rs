//! Command-line front end. All computation lives in the library; this
//! binary parses flags, assembles tables and sets the exit code:
//! 0 success, 1 a verification certificate failed, 2 usage or domain error.

use normax::report::{certificate_table, OutputSpec, Table};
use normax::verify::BoundCertificate;
use normax::{calibrate, distance, mc, norming, tables, verify};
use normax::{ApproxMethod, AuxiliaryKind, Error, LogSize, NormingPair};
use std::collections::HashMap;

const USAGE: &str = "\
normax — norming constants for normal maxima, with certified bounds

USAGE:
    normax <command> [--flag value ...]

COMMANDS:
    constants   location constants per method and size
                  --n <sizes>  [--methods <list>] (default: the six table rows)
    distance    distance of the normalized maximum law to the Gumbel
                  --n <sizes>  [--pairs <method:aux,...>]
                  or [--methods <list>] [--aux <list>] for the cross product
    table       one of the canonical comparison tables
                  --which 1|2|3
    verify      certificate suites; exit 1 if any certificate fails
                  --suite prop4|prop5|theorem1|dife|proof-constants|hall|rates
                  [--n0 <size>] [--n <sizes>]
    density     normalized-maximum density curves against the Gumbel density
                  [--n <size>] [--pairs <list>] [--grid lo:hi:step]
    calibrate   solve b_k = B_k(p, q) per size and average
                  [--m <int>] [--q <real>]
    simulate    reproducible exact simulation of the maximum
                  [--n <size>] [--reps <int>] [--seed <int>] [--pair m:a]
                  [--dump <file>]

COMMON FLAGS:
    --tol <real>        distance optimizer tolerance (default 1e-8)
    --digits <int>      5..16 decimal places, 17 = full precision (default 17)
    --out <file>        write CSV to a file instead of standard output
    --delimiter <char>  CSV delimiter (default ,)
    --jobs <int>        worker threads (default: number of processors)
    --seed <int>        simulation seed (default 0)

Sizes accept 123, 2.5, 1e30 and 10^100 forms.
";

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = match run(&args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("normax: {e}");
            2
        }
    };
    std::process::exit(code);
}

struct Flags(HashMap<String, String>);

impl Flags {
    fn parse(args: &[String], allowed: &[&str]) -> Result<Flags, Error> {
        let mut map = HashMap::new();
        let mut it = args.iter();
        while let Some(key) = it.next() {
            let name = key
                .strip_prefix("--")
                .ok_or_else(|| Error::Domain(format!("expected a --flag, got '{key}'")))?;
            if !allowed.contains(&name) {
                return Err(Error::Domain(format!("unknown flag --{name}")));
            }
            let value = it
                .next()
                .ok_or_else(|| Error::Domain(format!("flag --{name} needs a value")))?;
            map.insert(name.to_string(), value.clone());
        }
        Ok(Flags(map))
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(|s| s.as_str())
    }

    fn sizes(&self, key: &str, default: &[&str]) -> Result<Vec<LogSize>, Error> {
        match self.get(key) {
            Some(list) => list.split(',').map(|s| s.parse()).collect(),
            None => default.iter().map(|s| s.parse()).collect(),
        }
    }

    fn f64_or(&self, key: &str, default: f64) -> Result<f64, Error> {
        match self.get(key) {
            Some(s) => s
                .parse()
                .map_err(|_| Error::Domain(format!("bad value for --{key}: '{s}'"))),
            None => Ok(default),
        }
    }

    fn u64_or(&self, key: &str, default: u64) -> Result<u64, Error> {
        match self.get(key) {
            Some(s) => s
                .parse()
                .map_err(|_| Error::Domain(format!("bad value for --{key}: '{s}'"))),
            None => Ok(default),
        }
    }

    fn output_spec(&self, default_decimals: Option<usize>) -> Result<OutputSpec, Error> {
        let decimals = match self.get("digits") {
            Some(s) => {
                let d: u32 = s
                    .parse()
                    .map_err(|_| Error::Domain(format!("bad value for --digits: '{s}'")))?;
                OutputSpec::decimals_from_flag(d)?
            }
            None => default_decimals,
        };
        let delimiter = match self.get("delimiter") {
            Some(s) if s.chars().count() == 1 => s.chars().next().unwrap(),
            Some(s) => {
                return Err(Error::Domain(format!(
                    "delimiter must be a single character, got '{s}'"
                )))
            }
            None => ',',
        };
        Ok(OutputSpec {
            destination: self.get("out").map(std::path::PathBuf::from),
            decimals,
            delimiter,
        })
    }

    fn jobs(&self) -> Result<usize, Error> {
        match self.get("jobs") {
            Some(s) => s
                .parse()
                .map_err(|_| Error::Domain(format!("bad value for --jobs: '{s}'"))),
            None => Ok(normax::parallel::default_jobs()),
        }
    }
}

fn parse_pair_spec(token: &str) -> Result<(ApproxMethod, AuxiliaryKind), Error> {
    let (method_part, aux_part) = token
        .rsplit_once(':')
        .ok_or_else(|| Error::Domain(format!("pair spec needs method:aux, got '{token}'")))?;
    Ok((method_part.parse()?, aux_part.parse()?))
}

fn parse_pairs(flags: &Flags, default: &str) -> Result<Vec<(ApproxMethod, AuxiliaryKind)>, Error> {
    flags
        .get("pairs")
        .unwrap_or(default)
        .split(',')
        .map(parse_pair_spec)
        .collect()
}

fn emit(table: &Table, spec: &OutputSpec) -> Result<(), Error> {
    table
        .emit(spec)
        .map_err(|e| Error::Domain(format!("could not write output: {e}")))
}

fn run(args: &[String]) -> Result<i32, Error> {
    let Some(command) = args.first() else {
        eprint!("{USAGE}");
        return Ok(2);
    };
    let rest = &args[1..];
    match command.as_str() {
        "constants" => cmd_constants(rest),
        "distance" => cmd_distance(rest),
        "table" => cmd_table(rest),
        "verify" => cmd_verify(rest),
        "density" => cmd_density(rest),
        "calibrate" => cmd_calibrate(rest),
        "simulate" => cmd_simulate(rest),
        "help" | "--help" | "-h" => {
            print!("{USAGE}");
            Ok(0)
        }
        other => Err(Error::Domain(format!(
            "unknown command '{other}' (try 'normax help')"
        ))),
    }
}

fn cmd_constants(args: &[String]) -> Result<i32, Error> {
    let flags = Flags::parse(args, &["n", "methods", "digits", "out", "delimiter"])?;
    let sizes = flags.sizes("n", &["10", "1e2", "1e5", "1e10", "1e30", "1e60"])?;
    let methods: Vec<ApproxMethod> = match flags.get("methods") {
        Some(list) => list
            .split(',')
            .map(|s| s.parse())
            .collect::<Result<_, _>>()?,
        None => ApproxMethod::TABLE.to_vec(),
    };
    let spec = flags.output_spec(None)?;

    let mut header = vec!["n".to_string()];
    header.extend(methods.iter().map(|m| m.token()));
    let mut table = Table::new(header);
    for &n in &sizes {
        let mut row = vec![n.label()];
        for &m in &methods {
            let v = norming::location(m, n)
                .map_err(|e| Error::Domain(format!("method {m} at n = {n}: {e}")))?;
            row.push(spec.format(v));
        }
        table.push_row(row);
    }
    emit(&table, &spec)?;
    Ok(0)
}

fn cmd_distance(args: &[String]) -> Result<i32, Error> {
    let flags = Flags::parse(
        args,
        &[
            "n",
            "pairs",
            "methods",
            "aux",
            "tol",
            "digits",
            "out",
            "delimiter",
            "jobs",
        ],
    )?;
    let sizes = flags.sizes("n", &["10", "1e3", "1e10", "1e30", "1e50", "1e60"])?;
    // either explicit method:aux pairs, or the methods × aux cross product
    let specs = if flags.get("methods").is_some() || flags.get("aux").is_some() {
        if flags.get("pairs").is_some() {
            return Err(Error::Domain(
                "give either --pairs or --methods/--aux, not both".into(),
            ));
        }
        let methods: Vec<ApproxMethod> = flags
            .get("methods")
            .unwrap_or("exact")
            .split(',')
            .map(|s| s.parse())
            .collect::<Result<_, _>>()?;
        let auxes: Vec<AuxiliaryKind> = flags
            .get("aux")
            .unwrap_or("af")
            .split(',')
            .map(|s| s.parse())
            .collect::<Result<_, _>>()?;
        methods
            .iter()
            .flat_map(|&m| auxes.iter().map(move |&a| (m, a)))
            .collect()
    } else {
        parse_pairs(&flags, "exact:af,exact:ah,exact:ac,hallstar:af,hallstar:ah")?
    };
    let tol = flags.f64_or("tol", 1e-8)?;
    let jobs = flags.jobs()?;
    let out = flags.output_spec(None)?;

    let cells: Vec<(usize, usize)> = (0..specs.len())
        .flat_map(|r| (0..sizes.len()).map(move |c| (r, c)))
        .collect();
    let reports = normax::parallel::map_ordered(jobs, &cells, |&(r, c)| {
        let (m, a) = specs[r];
        let pair = norming::norming_pair(m, a, sizes[c])?;
        distance::dominant_peak_distance(sizes[c], &pair, tol)
    });

    let mut table = Table::new(
        ["method", "aux", "n", "sup", "argmax", "scaled"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    );
    for ((r, c), rep) in cells.into_iter().zip(reports) {
        let rep = rep?;
        let (m, a) = specs[r];
        table.push_row(vec![
            m.token(),
            a.token().to_string(),
            sizes[c].label(),
            out.format(rep.sup),
            out.format(rep.argmax),
            out.format(rep.scaled),
        ]);
    }
    emit(&table, &out)?;
    Ok(0)
}

fn cmd_table(args: &[String]) -> Result<i32, Error> {
    let flags = Flags::parse(
        args,
        &["which", "tol", "digits", "out", "delimiter", "jobs"],
    )?;
    let which = flags.u64_or("which", 0)?;
    let tol = flags.f64_or("tol", 1e-8)?;
    let jobs = flags.jobs()?;
    match which {
        1 => {
            let spec = flags.output_spec(Some(2))?;
            let sizes = tables::table1_sizes();
            let rows = tables::table1()?;
            let mut header = vec!["constant".to_string()];
            header.extend(sizes.iter().map(|n| n.label()));
            let mut table = Table::new(header);
            for (name, row) in ["c", "c_tilde"].iter().zip(rows) {
                let mut cells = vec![name.to_string()];
                cells.extend(row.iter().map(|&v| spec.format(v)));
                table.push_row(cells);
            }
            emit(&table, &spec)?;
        }
        2 => {
            let spec = flags.output_spec(Some(4))?;
            let sizes = tables::table2_sizes();
            let rows = tables::table2(tol, jobs)?;
            let mut header = vec!["location".to_string(), "scale".to_string()];
            header.extend(sizes.iter().map(|n| n.label()));
            let mut table = Table::new(header);
            for ((m, a), row) in tables::table2_specs().iter().zip(rows) {
                let mut cells = vec![m.token(), a.token().to_string()];
                cells.extend(row.iter().map(|&v| spec.format(v)));
                table.push_row(cells);
            }
            emit(&table, &spec)?;
        }
        3 => {
            let spec = flags.output_spec(Some(5))?;
            let sizes = tables::table3_sizes();
            let rows = tables::table3()?;
            let mut header = vec!["constant".to_string()];
            header.extend(sizes.iter().map(|n| n.label()));
            let mut table = Table::new(header);
            for (m, row) in tables::table3_methods().iter().zip(rows) {
                let mut cells = vec![m.token()];
                cells.extend(row.iter().map(|&v| spec.format(v)));
                table.push_row(cells);
            }
            emit(&table, &spec)?;
        }
        other => {
            return Err(Error::Domain(format!(
                "--which must be 1, 2 or 3, got {other}"
            )))
        }
    }
    Ok(0)
}

fn default_theorem_sizes(n0: LogSize) -> Vec<LogSize> {
    let ten_n0 = if n0.n().is_finite() && n0.n() <= 1e300 {
        LogSize::new(10.0 * n0.n()).unwrap()
    } else {
        LogSize::from_ln(n0.log_n() + std::f64::consts::LN_10).unwrap()
    };
    let candidates = [
        n0,
        ten_n0,
        "1e3".parse().unwrap(),
        "1e10".parse().unwrap(),
        "1e30".parse().unwrap(),
    ];
    candidates
        .into_iter()
        .filter(|n| n.log_n() >= n0.log_n() - 1e-12)
        .collect()
}

fn cmd_verify(args: &[String]) -> Result<i32, Error> {
    let flags = Flags::parse(
        args,
        &[
            "suite",
            "n0",
            "n",
            "tol",
            "digits",
            "out",
            "delimiter",
            "jobs",
        ],
    )?;
    let suite = flags
        .get("suite")
        .ok_or_else(|| Error::Domain("verify needs --suite".into()))?;
    let tol = flags.f64_or("tol", 1e-8)?;
    let jobs = flags.jobs()?;
    let spec = flags.output_spec(None)?;

    let certs: Vec<BoundCertificate> = match suite {
        "prop4" => {
            let grid = LogSize::log_spaced("2".parse()?, "1e100".parse()?, 200);
            let mut certs = Vec::with_capacity(400);
            for n in grid {
                certs.extend(verify::check_prop4(n)?);
            }
            certs
        }
        "prop5" => {
            let grid = LogSize::log_spaced("2".parse()?, "1e100".parse()?, 200);
            let ks: Vec<f64> = grid
                .iter()
                .map(|&n| verify::exact_square_over_log(n))
                .collect::<Result<_, _>>()?;
            let mut certs = Vec::new();
            for (w, k) in grid.windows(2).zip(ks.windows(2)) {
                certs.push(BoundCertificate::new(
                    format!("k_increasing@n={}", w[1]),
                    w[1].n(),
                    k[0],
                    k[1],
                ));
            }
            // pairwise growth bound on a coarser grid
            let coarse = LogSize::log_spaced("3".parse()?, "1e100".parse()?, 50);
            for i in 0..coarse.len() {
                for j in (i + 1)..coarse.len() {
                    let k0 = verify::k_constant(coarse[i])?;
                    let b = norming::exact_b(coarse[j])?;
                    certs.push(BoundCertificate::new(
                        format!("growth@n0={},n={}", coarse[i], coarse[j]),
                        coarse[j].n(),
                        k0 * coarse[j].log_n(),
                        b * b,
                    ));
                }
            }
            certs
        }
        "theorem1" => {
            let n0: LogSize = flags.get("n0").unwrap_or("16").parse()?;
            let sizes = match flags.get("n") {
                Some(list) => list
                    .split(',')
                    .map(|s| s.parse())
                    .collect::<Result<Vec<_>, _>>()?,
                None => default_theorem_sizes(n0),
            };
            verify::theorem1_certify(n0, &sizes, tol, jobs)?
        }
        "dife" => {
            let mut certs = Vec::new();
            for s in ["10", "100", "1e4"] {
                let n: LogSize = s.parse()?;
                let pair =
                    norming::norming_pair(ApproxMethod::Exact, AuxiliaryKind::FisherTippett, n)?;
                for x in [-2.0, -0.5, 0.5, 1.0, 3.0] {
                    certs.extend(verify::decomposition_certificates(n, &pair, x)?);
                }
            }
            certs
        }
        "proof-constants" => verify::proof_constants_check(),
        "hall" => {
            let sizes: Vec<LogSize> = (1..=60)
                .map(|k| LogSize::pow10(k as f64).unwrap())
                .collect();
            let scaled = normax::parallel::map_ordered(jobs, &sizes, |&n| -> Result<f64, Error> {
                let pair = norming::norming_pair(ApproxMethod::HallStar, AuxiliaryKind::Hall, n)?;
                Ok(distance::sup_distance(n, &pair, tol)?.scaled)
            });
            let mut certs = Vec::new();
            for (k, (n, s)) in sizes.iter().zip(scaled).enumerate() {
                let s = s?;
                certs.push(BoundCertificate::new(
                    format!("hall_upper@n={n}"),
                    n.n(),
                    s,
                    3.0,
                ));
                if k + 1 >= 3 {
                    certs.push(BoundCertificate::new(
                        format!("hall_floor@n={n}"),
                        n.n(),
                        0.33,
                        s,
                    ));
                }
            }
            certs
        }
        "rates" => rate_certificates()?,
        other => {
            return Err(Error::Domain(format!(
                "unknown suite '{other}' (prop4|prop5|theorem1|dife|proof-constants|hall|rates)"
            )))
        }
    };

    let table = certificate_table(&certs, &spec);
    emit(&table, &spec)?;
    let failures: Vec<&BoundCertificate> = certs.iter().filter(|c| !c.pass).collect();
    if failures.is_empty() {
        Ok(0)
    } else {
        for f in &failures {
            eprintln!(
                "normax: certificate failed: {} (lhs {} !< rhs {})",
                f.name, f.lhs, f.rhs
            );
        }
        Ok(1)
    }
}

// no-upward-trend certificates for the three asymptotic-rate sequences
fn rate_certificates() -> Result<Vec<BoundCertificate>, Error> {
    let mut seq_bar = Vec::new();
    let mut seq_hall = Vec::new();
    let mut seq_star = Vec::new();
    for k in 2..=60 {
        let n = LogSize::pow10(k as f64)?;
        let lam = n.log_n();
        let b = norming::exact_b(n)?;
        let bs = norming::hall_b_star(n)?;
        let barbeta = norming::approx_location(ApproxMethod::BarBeta, n)?;
        let barbetastar = norming::approx_location(ApproxMethod::BarBetaStar, n)?;
        seq_bar.push((b - barbeta).abs() * lam.powf(2.5) / lam.ln().powi(2));
        seq_hall.push((b - bs).abs() * lam.powf(1.5));
        seq_star.push((barbeta - barbetastar).abs() * lam.powf(1.5));
    }
    let quartile_means = |v: &[f64]| {
        let q = v.len() / 4;
        let first: f64 = v[..q].iter().sum::<f64>() / q as f64;
        let last: f64 = v[v.len() - q..].iter().sum::<f64>() / q as f64;
        (first, last)
    };
    let mut certs = Vec::new();
    for (name, seq) in [
        ("rate_bar_beta", seq_bar),
        ("rate_hall_gap", seq_hall),
        ("rate_star_gap", seq_star),
    ] {
        let (first, last) = quartile_means(&seq);
        certs.push(BoundCertificate::new(name, seq.len() as f64, last, first));
    }
    Ok(certs)
}

fn cmd_density(args: &[String]) -> Result<i32, Error> {
    let flags = Flags::parse(args, &["n", "pairs", "grid", "digits", "out", "delimiter"])?;
    let n: LogSize = flags.get("n").unwrap_or("100").parse()?;
    if n.n() < 2.0 {
        return Err(Error::Domain(format!("density needs n >= 2, got {n}")));
    }
    let specs = parse_pairs(&flags, "exact:af,hallstar:ah")?;
    let (lo, hi, step) = match flags.get("grid") {
        None => (-5.0, 12.0, 0.01),
        Some(g) => {
            let parts: Vec<&str> = g.split(':').collect();
            if parts.len() != 3 {
                return Err(Error::Domain(format!("grid must be lo:hi:step, got '{g}'")));
            }
            let parse = |s: &str| -> Result<f64, Error> {
                s.parse()
                    .map_err(|_| Error::Domain(format!("bad grid number '{s}'")))
            };
            (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?)
        }
    };
    let pairs: Vec<NormingPair> = specs
        .iter()
        .map(|&(m, a)| norming::norming_pair(m, a, n))
        .collect::<Result<_, _>>()?;
    let (xs, cols) = tables::density_grid(n, &pairs, lo, hi, step)?;
    let spec = flags.output_spec(None)?;

    let mut header = vec!["x".to_string(), "gumbel".to_string()];
    header.extend(
        specs
            .iter()
            .map(|(m, a)| format!("{}:{}", m.token(), a.token())),
    );
    let mut table = Table::new(header);
    for (i, &x) in xs.iter().enumerate() {
        let mut row = vec![spec.format(x)];
        for col in &cols {
            row.push(spec.format(col[i]));
        }
        table.push_row(row);
    }
    emit(&table, &spec)?;
    Ok(0)
}

fn cmd_calibrate(args: &[String]) -> Result<i32, Error> {
    let flags = Flags::parse(args, &["m", "q", "digits", "out", "delimiter"])?;
    let m = flags.u64_or("m", 100)?;
    let q = flags.f64_or("q", calibrate::default_q())?;
    let spec = flags.output_spec(None)?;
    let result = calibrate::p_hat(m, q)?;

    let mut table = Table::new(vec!["k".to_string(), "p_k".to_string()]);
    for (k, p) in &result.per_k {
        table.push_row(vec![k.to_string(), spec.format(*p)]);
    }
    table.push_row(vec!["p_hat".to_string(), spec.format(result.p_hat)]);
    emit(&table, &spec)?;
    Ok(0)
}

fn cmd_simulate(args: &[String]) -> Result<i32, Error> {
    let flags = Flags::parse(
        args,
        &[
            "n",
            "reps",
            "seed",
            "pair",
            "dump",
            "digits",
            "out",
            "delimiter",
            "jobs",
        ],
    )?;
    let n: LogSize = flags.get("n").unwrap_or("100").parse()?;
    let reps = flags.u64_or("reps", 1_000_000)?;
    let seed = flags.u64_or("seed", 0)?;
    let (method, aux) = parse_pair_spec(flags.get("pair").unwrap_or("exact:af"))?;
    let pair = norming::norming_pair(method, aux, n)?;
    let jobs = flags.jobs()?;
    let cfg = mc::SimConfig {
        n,
        reps,
        seed,
        pair,
    };
    let spec = flags.output_spec(None)?;

    if let Some(path) = flags.get("dump") {
        let samples = mc::normalized_samples(&cfg, jobs)?;
        let mut text = String::with_capacity(samples.len() * 20);
        for s in &samples {
            text.push_str(&format!("{s}\n"));
        }
        std::fs::write(path, text)
            .map_err(|e| Error::Domain(format!("could not write dump: {e}")))?;
    }

    let report = mc::simulate(&cfg, jobs)?;
    let mut table = Table::new(
        [
            "n",
            "method",
            "aux",
            "reps",
            "seed",
            "ks_distance",
            "sample_mean",
            "sample_sd",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect(),
    );
    table.push_row(vec![
        n.label(),
        method.token(),
        aux.token().to_string(),
        reps.to_string(),
        seed.to_string(),
        spec.format(report.ks_distance),
        spec.format(report.sample_mean),
        spec.format(report.sample_sd),
    ]);
    emit(&table, &spec)?;
    Ok(0)
}
