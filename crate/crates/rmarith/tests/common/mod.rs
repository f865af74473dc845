//! Golden CLI invocations shared by the CLI tests and the acceptance run.

#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

pub struct Golden {
    pub args: &'static [&'static str],
    pub exit: i32,
    /// Substrings expected on stdout (or stderr for failures), compared with
    /// runs of spaces collapsed.
    pub expect: &'static [&'static str],
}

pub const GOLDEN: &[Golden] = &[
    Golden { args: &["classgroup", "-D", "-23", "--json"], exit: 0, expect: &["\"h\": 3", "\"divisors\": [\n 3\n ]"] },
    Golden { args: &["classgroup", "-D", "5"], exit: 0, expect: &["h 1"] },
    Golden { args: &["classgroup", "-D", "9"], exit: 2, expect: &["square discriminant"] },
    Golden { args: &["classgroup", "-D", "-420", "--json"], exit: 0, expect: &["\"h\": 8", "\"divisors\": [\n 2,\n 2,\n 2\n ]"] },
    Golden { args: &["classgroup", "--dk", "-4", "-f", "5", "--csv"], exit: 0, expect: &["-100,-4,5,2,2,2,2"] },
    Golden { args: &["classgroup", "-D", "12", "--json"], exit: 0, expect: &["\"h\": 2", "\"h_wide\": 1"] },
    Golden { args: &["classgroup", "-D", "7"], exit: 2, expect: &["-D:"] },
    Golden { args: &["rm-conductor", "-d", "2", "-f", "1"], exit: 0, expect: &["rm_conductor 1"] },
    Golden { args: &["rm-conductor", "-d", "5", "-f", "1", "--json"], exit: 0, expect: &["\"cm_class_number\": 2", "\"rm_class_number\": 2", "\"rm_conductor\": 8"] },
    Golden { args: &["rm-conductor", "-d", "5", "-f", "1", "--limit", "0"], exit: 3, expect: &["no conductor up to 0"] },
    Golden { args: &["rm-conductor", "-d", "23", "-f", "1", "--limit", "200", "--json"], exit: 3, expect: &["class number 3"] },
    Golden { args: &["rm-conductor", "-d", "4", "-f", "1"], exit: 2, expect: &["-d:"] },
    Golden { args: &["cf", "--sqrt", "2"], exit: 0, expect: &["[1;(2)]"] },
    Golden { args: &["cf", "--quadratic", "-1,2,5", "--blocks", "3", "--json"], exit: 0, expect: &["[0;(1)]", "\"periodic\": true"] },
    Golden { args: &["cf", "--rational", "7/3", "--csv"], exit: 0, expect: &["7/3,[2;3],2 3,,false"] },
    Golden { args: &["cf", "--rational", "1/0"], exit: 2, expect: &["--rational: zero denominator"] },
    Golden { args: &["cf", "--sqrt", "16"], exit: 2, expect: &["--sqrt:"] },
    Golden { args: &["sha", "--matrix", "1,1,1,0"], exit: 0, expect: &["sha_order 1"] },
    Golden { args: &["sha", "--charpoly", "1,-6,-1", "--similarity-bound", "12", "--json"], exit: 0, expect: &["\"sha_order\": 2", "\"similarity_classes\": 2"] },
    Golden { args: &["sha", "--matrix", "1,-1,1,0"], exit: 2, expect: &["--matrix:"] },
    Golden { args: &["height", "--theta", "1/3", "--theta", "quad:-1,2,5", "--json"], exit: 0, expect: &["\"height\": \"12\"", "\"1/4\"", "\"2/3\""] },
    Golden { args: &["height", "--theta", "sqrt:2"], exit: 0, expect: &["question_mark 2/5"] },
    Golden { args: &["height", "--theta", "x"], exit: 2, expect: &["--theta:"] },
    Golden { args: &["count", "-n", "1", "--tmax", "256", "--csv"], exit: 0, expect: &["T,N,log2N", "256,79792,"] },
    Golden { args: &["count", "-n", "1", "--tmin", "16", "--tmax", "1024", "--quantum", "--json"], exit: 0, expect: &["\"slope\": 1.0"] },
    Golden { args: &["count", "-n", "0", "--tmax", "4"], exit: 2, expect: &["-n:"] },
];

pub fn run(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_rmarith"));
    cmd.args(args).env_remove("RMARITH_CACHE");
    match cache {
        Some(p) => cmd.arg("--cache").arg(p),
        None => cmd.arg("--no-cache"),
    };
    cmd.output().expect("binary runs")
}

/// Checks exit code and expected substrings; returns a description of the first mismatch.
pub fn check(g: &Golden, out: &Output) -> Result<(), String> {
    let code = out.status.code().unwrap_or(-1);
    if code != g.exit {
        return Err(format!(
            "{:?}: exit {code}, wanted {}; stderr {}",
            g.args,
            g.exit,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let text = if g.exit == 0 { &out.stdout } else { &out.stderr };
    let text = squeeze(&String::from_utf8_lossy(text));
    for e in g.expect {
        if !text.contains(e) {
            return Err(format!("{:?}: missing {e:?} in\n{text}", g.args));
        }
    }
    Ok(())
}

fn squeeze(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for (i, c) in s.char_indices() {
        if !(c == ' ' && s[..i].ends_with(' ')) {
            out.push(c);
        }
    }
    out
}

/// Parses a JSON report back into its type and recomputes it through the library.
pub fn json_round_trip(args: &[&str], stdout: &str) -> Result<(), String> {
    use rmarith::commands::*;
    use rmarith::report::*;

    fn reparse<R: Report>(s: &str) -> Result<R, String> {
        let r: R = serde_json::from_str(s).map_err(|e| e.to_string())?;
        let again = render(&r, Format::Json);
        if again != s {
            return Err(format!("re-serialised JSON differs:\n{again}\nvs\n{s}"));
        }
        Ok(r)
    }
    fn same<R: Report>(parsed: R, recomputed: R) -> Result<(), String> {
        if parsed == recomputed {
            Ok(())
        } else {
            Err(format!("{parsed:?} != {recomputed:?}"))
        }
    }
    let ctx = || Context::new(rmarith::ClassNumberCache::in_memory(), 2);
    let err = |e: rmarith::CliError| e.to_string();
    match args[0] {
        "classgroup" => {
            let r: ClassGroupReport = reparse(stdout)?;
            let input = ClassGroupInput::Discriminant(parse_int("-D", &r.discriminant).map_err(err)?);
            same(r, classgroup(&mut ctx(), &input).map_err(err)?)
        }
        "rm-conductor" => {
            let r: ConductorReport = reparse(stdout)?;
            let d = parse_int("-d", &r.d).map_err(err)?;
            let again = rm_conductor(&mut ctx(), &d, r.f, r.rm_conductor).map_err(err)?;
            same(r, again)
        }
        "cf" => {
            let r: CfReport = reparse(stdout)?;
            // the input prints as (P+√D)/Q or p/q
            let input = match r.minimal_polynomial {
                None => CfInput::Rational(parse_rational("--rational", &r.input).map_err(err)?),
                Some(_) => {
                    let pos = args.iter().position(|a| *a == "--quadratic").unwrap();
                    CfInput::Quadratic(parse_quadratic("--quadratic", args[pos + 1]).map_err(err)?)
                }
            };
            let again = cf(&input, r.convergents.len(), r.blocks.len()).map_err(err)?;
            same(r, again)
        }
        "sha" => {
            let r: ShaReport = reparse(stdout)?;
            let input = match &r.matrix {
                Some(m) => ShaInput::Matrix(parse_int_list("--matrix", &m.join(",")).map_err(err)?),
                None => {
                    let pos = args.iter().position(|a| *a == "--charpoly").unwrap();
                    ShaInput::CharPoly(parse_int_list("--charpoly", args[pos + 1]).map_err(err)?)
                }
            };
            let bound = r.similarity_classes.map(|_| {
                let pos = args.iter().position(|a| *a == "--similarity-bound").unwrap();
                args[pos + 1].parse().unwrap()
            });
            let again = sha(&input, bound).map_err(err)?;
            same(r, again)
        }
        "height" => {
            let r: HeightReport = reparse(stdout)?;
            // the printed θ are display forms, so recompute from the arguments
            let orig: Vec<_> = args
                .windows(2)
                .filter(|w| w[0] == "--theta")
                .map(|w| parse_theta("--theta", w[1]))
                .collect::<Result<_, _>>()
                .map_err(err)?;
            same(r, height(&orig).map_err(err)?)
        }
        "count" => {
            let r: CountReport = reparse(stdout)?;
            let (tmin, tmax) = (r.rows[0].t, r.rows.last().unwrap().t);
            same(r.clone(), count(r.n, tmin, tmax, r.quantum, 2).map_err(err)?)
        }
        other => Err(format!("no round trip for {other}")),
    }
}
