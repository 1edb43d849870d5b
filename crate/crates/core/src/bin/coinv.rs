use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coinv::basis::{
    b_face, b_g, b_osp, classify_mu, enumerate_basis, forbidden_pattern, gd_from_multichain, tilde_b, tilde_b_face,
    tilde_b_osp,
};
use coinv::combinatorics::{enumerate_faces, enumerate_osp, enumerate_words, ColoredWord, Face, Osp};
use coinv::ideal::{Setting, Variant};
use coinv::monomial::{XMonomial, YMonomial};
use coinv::oracle::{hilbert_combinatorial, hilbert_oracle, Caps, CharacterRoute};
use coinv::rewrite::{normal_form_x, reduce_x_stratum, reduce_y_traced, Strategy};
use coinv::symfun::{
    graded_frobenius, graded_frobenius_formula, multigraded_frobenius_from_slices, multigraded_frobenius_s,
    schur_q_to_json, TPoly,
};
use coinv::verify::{verify, VerifyOptions};
use coinv::{Error, Result};

#[derive(Parser)]
#[command(name = "coinv", version, about = "Coinvariant-type quotients of G(r,1,n): bases, rewriting and series")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct Common {
    #[arg(short = 'n', default_value_t = 3)]
    n: usize,
    #[arg(short = 'k', default_value_t = 0)]
    k: usize,
    #[arg(short = 'r', default_value_t = 1)]
    r: usize,
    #[arg(long, default_value = "S", value_parser = parse_variant)]
    variant: Variant,
    #[arg(long, default_value = "x", value_parser = parse_setting)]
    setting: Setting,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long = "cap-degree", default_value_t = Caps::default().max_degree)]
    cap_degree: usize,
    #[arg(long = "cap-slice", default_value_t = Caps::default().max_slice)]
    cap_slice: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl Common {
    fn caps(&self) -> Caps {
        Caps { max_degree: self.cap_degree, max_slice: self.cap_slice }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > 16 {
            return Err(Error::Domain(format!("n = {} outside 1..=16", self.n)));
        }
        if self.k > self.n {
            return Err(Error::Domain(format!("k = {} exceeds n = {}", self.k, self.n)));
        }
        if self.r == 0 {
            return Err(Error::Domain("r must be positive".into()));
        }
        Ok(())
    }
}

fn parse_variant(s: &str) -> std::result::Result<Variant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_setting(s: &str) -> std::result::Result<Setting, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Largest,
    Smallest,
    LowestCase,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Largest => Strategy::LargestVariable,
            StrategyArg::Smallest => Strategy::SmallestVariable,
            StrategyArg::LowestCase => Strategy::LowestCase,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Method {
    Oracle,
    Combinatorial,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Source {
    Formula,
    Oracle,
}

#[derive(Subcommand)]
enum Cmd {
    /// List colored words, ordered set partitions or faces with statistics
    Enumerate {
        #[command(flatten)]
        c: Common,
        #[arg(long, group = "kind")]
        words: bool,
        #[arg(long, group = "kind")]
        osp: bool,
        #[arg(long, group = "kind")]
        faces: bool,
    },
    /// Statistics and descent monomials of one object or monomial
    Stats {
        #[command(flatten)]
        c: Common,
        #[arg(long, group = "obj")]
        word: Option<String>,
        #[arg(long = "partition", group = "obj", help = "ordered set partition as `(word; lambda)` or `B1|B2|...`")]
        partition: Option<String>,
        #[arg(long, group = "obj", help = "face as `(Z; word; lambda)`")]
        face: Option<String>,
        #[arg(long, group = "obj")]
        monomial: Option<String>,
    },
    /// The standard monomial basis with its index objects
    Basis {
        #[command(flatten)]
        c: Common,
    },
    /// Hilbert series coefficients
    Hilbert {
        #[command(flatten)]
        c: Common,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
    },
    /// Graded Frobenius image in the Schur basis (r = 1)
    Frobenius {
        #[command(flatten)]
        c: Common,
        #[arg(long, value_enum, default_value_t = Source::Formula)]
        source: Source,
        #[arg(long)]
        multigraded: bool,
    },
    /// Straighten a monomial and print every move
    Rewrite {
        #[command(flatten)]
        c: Common,
        #[arg(long)]
        monomial: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Largest)]
        strategy: StrategyArg,
    },
    /// Run the verification suite
    Verify {
        #[command(flatten)]
        c: Common,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 40)]
        samples: usize,
    },
}

/// A printable result: JSON is canonical, text and CSV are projections.
struct Output {
    json: Value,
    text: String,
    csv: Option<String>,
}

fn table(header: &[&str], rows: &[Vec<String>], sep: &str) -> String {
    let mut s = header.join(sep);
    s.push('\n');
    for r in rows {
        s.push_str(&r.join(sep));
        s.push('\n');
    }
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', ' ']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn rows_output(header: &[&str], rows: Vec<Vec<String>>, extra: Value) -> Output {
    let objs: Vec<Value> = rows
        .iter()
        .map(|r| Value::Object(header.iter().zip(r).map(|(h, v)| (h.to_string(), json!(v))).collect()))
        .collect();
    let mut json = json!({ "rows": objs, "count": rows.len() });
    if let (Value::Object(m), Value::Object(e)) = (&mut json, extra) {
        m.extend(e);
    }
    let mut text = table(header, &rows, "\t");
    let _ = write!(text, "count: {}", rows.len());
    let quoted: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|v| csv_field(v)).collect()).collect();
    let mut csv = table(header, &quoted, ",");
    let _ = write!(csv, "# count: {}", rows.len());
    Output { json, text, csv: Some(csv) }
}

fn cmd_enumerate(c: &Common, words: bool, faces: bool) -> Result<Output> {
    c.validate()?;
    let (n, k, r) = (c.n, c.k, c.r);
    if words {
        let rows = enumerate_words(n, r)?
            .iter()
            .map(|w| vec![w.to_string(), w.des().to_string(), w.maj().to_string()])
            .collect();
        return Ok(rows_output(&["word", "des", "maj"], rows, json!({"kind": "words"})));
    }
    if faces {
        let rows = enumerate_faces(n, k, r)?
            .iter()
            .map(|f| {
                Ok(vec![
                    f.to_string(),
                    f.blocks_string(k)?,
                    f.word().des().to_string(),
                    f.word().maj().to_string(),
                    f.comaj(k).to_string(),
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(rows_output(&["face", "blocks", "des", "maj", "comaj"], rows, json!({"kind": "faces"})));
    }
    let rows = enumerate_osp(n, k, r)?
        .iter()
        .map(|p| {
            Ok(vec![
                p.to_string(),
                p.blocks_string(k)?,
                p.word().des().to_string(),
                p.word().maj().to_string(),
                p.comaj().to_string(),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows_output(&["osp", "blocks", "des", "maj", "comaj"], rows, json!({"kind": "osp"})))
}

fn kv_output(pairs: Vec<(&str, String)>) -> Output {
    let json = Value::Object(pairs.iter().map(|(k, v)| (k.to_string(), json!(v))).collect());
    let text = pairs.iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join("\n");
    let csv = format!(
        "{}\n{}",
        pairs.iter().map(|p| p.0).collect::<Vec<_>>().join(","),
        pairs.iter().map(|p| csv_field(&p.1)).collect::<Vec<_>>().join(",")
    );
    Output { json, text, csv: Some(csv) }
}

fn set_string(v: &[usize]) -> String {
    format!("{{{}}}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn word_stats(w: &ColoredWord) -> Vec<(&'static str, String)> {
    vec![
        ("word", w.to_string()),
        ("des_set", set_string(&w.descent_set())),
        ("des", w.des().to_string()),
        ("maj", w.maj().to_string()),
        ("b", b_g(w).to_string()),
        ("tilde_b", tilde_b(w).to_string()),
    ]
}

fn cmd_stats(c: &Common, word: Option<&str>, osp: Option<&str>, face: Option<&str>, mono: Option<&str>) -> Result<Output> {
    c.validate()?;
    let (n, k, r) = (c.n, c.k, c.r);
    if let Some(s) = word {
        return Ok(kv_output(word_stats(&ColoredWord::parse(s, n, r)?)));
    }
    if let Some(s) = osp {
        let p = if s.trim_start().starts_with('(') { Osp::parse(s, n, k, r)? } else { Osp::parse_blocks(s, n, r)? };
        let mut pairs = vec![("osp", p.to_string()), ("blocks", p.blocks_string(k)?)];
        pairs.extend(word_stats(p.word()).into_iter().skip(1).take(3));
        pairs.push(("comaj", p.comaj().to_string()));
        if r == 1 {
            pairs.push(("hrs_maj", p.hrs_maj(k)?.to_string()));
        }
        pairs.push(("b", b_osp(&p).to_string()));
        pairs.push(("tilde_b", tilde_b_osp(&p).to_string()));
        return Ok(kv_output(pairs));
    }
    if let Some(s) = face {
        let f = Face::parse(s, n, k, r)?;
        let mut pairs = vec![("face", f.to_string()), ("blocks", f.blocks_string(k)?)];
        pairs.extend(word_stats(f.word()).into_iter().skip(1).take(3));
        pairs.push(("comaj", f.comaj(k).to_string()));
        pairs.push(("b", b_face(&f, k).to_string()));
        pairs.push(("tilde_b", tilde_b_face(&f, k)?.to_string()));
        return Ok(kv_output(pairs));
    }
    let Some(s) = mono else {
        return Err(Error::Parse("one of --word, --partition, --face, --monomial is required".into()));
    };
    if s.trim_start().starts_with('x') {
        let x = XMonomial::parse(s, n)?;
        return Ok(kv_output(vec![
            ("monomial", x.to_string()),
            ("degree", x.degree().to_string()),
            ("mu", x.mu().to_string()),
        ]));
    }
    let y = YMonomial::parse(s)?;
    let mut pairs = vec![
        ("monomial", y.to_string()),
        ("degree", y.degree().to_string()),
        ("deg_tilde", y.deg_tilde().to_string()),
        ("multichain", y.is_multichain().to_string()),
    ];
    if y.is_multichain() {
        let v = c.variant;
        pairs.push(("mu", y.mu().to_string()));
        pairs.push(("admissibility", format!("{:?}", classify_mu(&y.mu(), n, k, r, v)?)));
        pairs.push((
            "forbidden_pattern",
            forbidden_pattern(&y, n, k, r, v).map_or_else(|| "none".to_string(), |i| i.to_string()),
        ));
        pairs.push(("gd", gd_from_multichain(&y, n, r)?.to_string()));
        pairs.push(("phi", y.phi(n).to_string()));
    }
    Ok(kv_output(pairs))
}

fn cmd_basis(c: &Common) -> Result<Output> {
    c.validate()?;
    let rows = enumerate_basis(c.n, c.k, c.r, c.variant)?
        .iter()
        .map(|b| {
            let (first, second) = match c.setting {
                Setting::X => (b.x.to_string(), b.y.to_string()),
                Setting::Y => (b.y.to_string(), b.x.to_string()),
            };
            vec![b.index.to_string(), first, second, b.degree.to_string(), b.comaj.to_string()]
        })
        .collect();
    let header: &[&str] = match c.setting {
        Setting::X => &["index", "x", "y", "degree", "comaj"],
        Setting::Y => &["index", "y", "x", "degree", "comaj"],
    };
    Ok(rows_output(header, rows, json!({"n": c.n, "k": c.k, "r": c.r, "variant": c.variant.to_string()})))
}

fn joined(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_hilbert(c: &Common, method: Method) -> Result<Output> {
    c.validate()?;
    if method == Method::Combinatorial {
        let h = hilbert_combinatorial(c.n, c.k, c.r, c.variant)?;
        let csv = format!("degree,quotient_dim\n{}", h.iter().enumerate().map(|(d, q)| format!("{d},{q}")).collect::<Vec<_>>().join("\n"));
        return Ok(Output {
            json: json!({"n": c.n, "k": c.k, "r": c.r, "variant": c.variant.to_string(), "hilbert": h, "total": h.iter().sum::<usize>()}),
            text: joined(&h),
            csv: Some(csv),
        });
    }
    let rep = hilbert_oracle(c.n, c.k, c.r, c.variant, c.setting, c.caps())?;
    let mut csv = String::from("degree,monomials,ideal_dim,quotient_dim");
    for row in &rep.rows {
        let _ = write!(csv, "\n{},{},{},{}", row.degree, row.monomials, row.ideal_dim, row.quotient_dim);
    }
    Ok(Output { json: rep.to_json(), text: joined(&rep.coefficients()), csv: Some(csv) })
}

fn tpoly_string(p: &TPoly) -> String {
    let mut parts = Vec::new();
    for (e, c) in p.iter().rev() {
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| if x == 1 { format!("t{}", i + 1) } else { format!("t{}^{x}", i + 1) })
            .collect();
        let mono = mono.join("*");
        parts.push(match (mono.is_empty(), *c) {
            (true, _) => c.to_string(),
            (false, 1) => mono,
            (false, _) => format!("{c}*{mono}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn cmd_frobenius(c: &Common, source: Source, multigraded: bool) -> Result<Output> {
    c.validate()?;
    if c.r != 1 {
        return Err(Error::Unsupported("Frobenius images are computed for r = 1 only".into()));
    }
    if source == Source::Formula && c.variant != Variant::S {
        return Err(Error::Unsupported("the closed formula covers variant S; use --source oracle".into()));
    }
    if multigraded {
        let schur = match source {
            Source::Formula => multigraded_frobenius_s(c.n, c.k)?.to_schur()?,
            Source::Oracle => multigraded_frobenius_from_slices(c.n, c.k, c.variant, c.caps())?,
        };
        let terms: Vec<Value> = schur
            .iter()
            .map(|(l, p)| {
                json!({
                    "partition": l.parts(),
                    "poly": tpoly_string(p),
                    "monomials": p.iter().map(|(e, c)| json!({"t": e, "coeff": c})).collect::<Vec<_>>(),
                })
            })
            .collect();
        let text = schur.iter().map(|(l, p)| format!("s{l}: {}", tpoly_string(p))).collect::<Vec<_>>().join("\n");
        return Ok(Output { json: json!({"basis": "schur", "multigraded": true, "terms": terms}), text, csv: None });
    }
    let schur = match source {
        Source::Formula => graded_frobenius_formula(c.n, c.k)?,
        Source::Oracle => {
            let route = match c.setting {
                Setting::X => CharacterRoute::XOracle,
                Setting::Y => CharacterRoute::YOracle,
            };
            graded_frobenius(c.n, c.k, c.variant, route, c.caps())?
        }
    };
    let json = schur_q_to_json(&schur);
    let text = json["terms"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|t| format!("s({}): {}", joined(&serde_json::from_value::<Vec<usize>>(t["partition"].clone()).unwrap_or_default()), t["poly"].as_str().unwrap_or("")))
        .collect::<Vec<_>>()
        .join("\n");
    let csv = format!(
        "partition,poly\n{}",
        json["terms"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|t| format!("{},{}", csv_field(&t["partition"].to_string()), csv_field(t["poly"].as_str().unwrap_or(""))))
            .collect::<Vec<_>>()
            .join("\n")
    );
    Ok(Output { json, text, csv: Some(csv) })
}

fn cmd_rewrite(c: &Common, monomial: &str, strategy: Strategy) -> Result<Output> {
    c.validate()?;
    let (n, k, r, v) = (c.n, c.k, c.r, c.variant);
    if monomial.trim_start().starts_with('x') {
        let x = XMonomial::parse(monomial, n)?;
        let strat = reduce_x_stratum(&x, n, k, r, v)?;
        let nf = normal_form_x(&x, n, k, r, v)?;
        let higher: Vec<String> = strat
            .higher_mu
            .monomials()
            .map(|m| m.mu())
            .collect::<std::collections::BTreeSet<_>>()
            .iter()
            .map(|mu| mu.to_string())
            .collect();
        let text = format!(
            "x = {x}\nmu = {}\nsame mu: {}\nhigher mu: {}\nhigher partitions: {}\nnormal form: {nf}",
            x.mu(),
            strat.same_mu,
            strat.higher_mu,
            higher.join(" "),
        );
        let json = json!({
            "input": x.to_string(), "mu": x.mu().to_string(),
            "same_mu": strat.same_mu.to_json(), "higher_mu": strat.higher_mu.to_json(),
            "higher_partitions": higher, "normal_form": nf.to_json(),
        });
        return Ok(Output { json, text, csv: None });
    }
    let y = YMonomial::parse(monomial)?;
    let trace = reduce_y_traced(&y, n, k, r, v, strategy)?;
    let json = json!({
        "input": trace.input.to_string(),
        "admissibility": trace.admissibility,
        "steps": trace.steps.iter().map(|s| json!({
            "target": s.target.to_string(),
            "moved": s.moved.to_string(),
            "replacement": s.replacement.to_json(),
            "after": s.after.to_json(),
            "after_text": s.after.to_string(),
        })).collect::<Vec<_>>(),
        "result": trace.result.to_json(),
        "result_text": trace.result.to_string(),
    });
    Ok(Output { json, text: trace.to_string(), csv: None })
}

fn cmd_verify(c: &Common, all: bool, samples: usize) -> Result<(Output, bool)> {
    c.validate()?;
    let opts = VerifyOptions { all, seed: c.seed, samples, caps: c.caps() };
    let rep = verify(c.n, c.k, c.r, c.variant, &opts)?;
    let mut text = String::new();
    for ch in &rep.checks {
        let _ = writeln!(text, "{} {}: {}", if ch.passed { "PASS" } else { "FAIL" }, ch.name, ch.detail);
    }
    let _ = write!(text, "{}", if rep.passed() { "all checks passed" } else { "verification FAILED" });
    let csv = format!(
        "check,passed,detail\n{}",
        rep.checks.iter().map(|ch| format!("{},{},{}", csv_field(&ch.name), ch.passed, csv_field(&ch.detail))).collect::<Vec<_>>().join("\n")
    );
    let passed = rep.passed();
    Ok((Output { json: rep.to_json(), text, csv: Some(csv) }, passed))
}

fn emit(out: &Output, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
        Format::Text => println!("{}", out.text),
        Format::Csv => match &out.csv {
            Some(s) => println!("{s}"),
            None => println!("{}", out.text),
        },
    }
}

fn run(cli: Cli) -> Result<bool> {
    let (out, passed, format) = match &cli.cmd {
        Cmd::Enumerate { c, words, faces, .. } => (cmd_enumerate(c, *words, *faces)?, true, c.format),
        Cmd::Stats { c, word, partition, face, monomial } => {
            (cmd_stats(c, word.as_deref(), partition.as_deref(), face.as_deref(), monomial.as_deref())?, true, c.format)
        }
        Cmd::Basis { c } => (cmd_basis(c)?, true, c.format),
        Cmd::Hilbert { c, method } => (cmd_hilbert(c, *method)?, true, c.format),
        Cmd::Frobenius { c, source, multigraded } => (cmd_frobenius(c, *source, *multigraded)?, true, c.format),
        Cmd::Rewrite { c, monomial, strategy } => (cmd_rewrite(c, monomial, (*strategy).into())?, true, c.format),
        Cmd::Verify { c, all, samples } => {
            let (o, p) = cmd_verify(c, *all, *samples)?;
            (o, p, c.format)
        }
    };
    emit(&out, format);
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
