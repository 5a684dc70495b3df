use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pairability"))
        .args(args)
        .output()
        .expect("run binary")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn column(out: &str, name: &str) -> Vec<f64> {
    let mut lines = out.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let i = header.iter().position(|h| *h == name).unwrap();
    lines.map(|l| l.split(',').nth(i).unwrap().parse().unwrap()).collect()
}

#[test]
fn gamma_table() {
    let o = run(&["gamma", "--generator", "neglog", "--from", "1", "--to", "5", "--step", "0.5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("x,quadrature,closed_form,abs_diff\n"));
    let diffs = column(&out, "abs_diff");
    assert_eq!(diffs.len(), 9);
    assert!(diffs.iter().all(|d| *d <= 1e-6));
    assert!(!out.contains('\r'));
}

#[test]
fn gamma_custom_generator() {
    let o = run(&["gamma", "--generator", "custom", "--phi", "-log(t)", "--from", "2", "--to", "3", "--step", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let q = column(&stdout(&o), "quadrature");
    assert!((q[0] - 1.0).abs() <= 1e-9 && (q[1] - 2.0).abs() <= 1e-9);
}

#[test]
fn output_is_bit_stable() {
    let args = ["gamma", "--generator", "exponential", "--param", "a=2", "--from", "-1", "--to", "2", "--step", "0.25"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn identity_checks() {
    let o = run(&["identity", "--check", "pythagoras", "--points", "0.3,1.0,2.2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(column(&stdout(&o), "residual").iter().all(|r| *r <= 1e-10));
    let o = run(&["identity", "--check", "product", "--grid", "0:3:7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn trig_table() {
    let o = run(&["trig", "--points", "0.5,1.5707963267948966,2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("z,sin,cos,tan,abs_diff\n"));
}

#[test]
fn verify_reports() {
    let o = run(&["verify", "--f", "2^x", "--period", "-1", "--equation", "S", "--grid", "-3:3:25", "--tol", "1e-9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: pass"));

    let o = run(&["verify", "--f", "sin(x)", "--g", "cos(x)", "--classify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("classification: not a Cauchy pair"));

    let o = run(&["verify", "--family", "exponential", "--param", "a=3", "--period", "-log(2)/log(3)", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next().unwrap(), "equation,max_residual,worst_x,worst_y,evaluated,skipped,pass,classification");

    let o = run(&["verify", "--f", "cos(x)", "--period", "-pi/2", "--equation", "C"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn singular_locus_is_skipped() {
    let o = run(&["verify", "--f", "3*x", "--period", "1/3 - 2*x*y/(x+y)", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let row = stdout(&o).lines().nth(1).unwrap().to_owned();
    assert_eq!(row.split(',').nth(5), Some("25"));
}

#[test]
fn failures_exit_nonzero_with_one_line() {
    for (args, code) in [
        (vec!["verify", "--f", "2^x", "--period", "-0.9"], 1),
        (vec!["verify", "--f", "2^(x", "--period", "-1"], 2),
        (vec!["verify", "--f", "2^x", "--period", "-1", "--grid", "3:-3"], 2),
        (vec!["verify", "--f", "2^x", "--period", "-1", "--tol", "0"], 2),
        (vec!["verify", "--f", "q*x", "--period", "-1"], 2),
        (vec!["period", "--kind", "power-s", "--param", "p=3", "--param", "x=1", "--param", "y=1"], 1),
        (vec!["period", "--kind", "additive-s"], 2),
        (vec!["bogus"], 2),
        (vec!["representer", "--family", "exponential", "--param", "a=2", "--kind", "cosine-plus", "--period"], 1),
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(code), "{args:?}: {}", stderr(&o));
        let err = stderr(&o);
        assert!(err.starts_with("error: "), "{args:?}: {err}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn period_tables() {
    let o = run(&["period", "--kind", "additive-s", "--param", "c=1", "--param", "x=1", "--param", "y=1"]);
    assert_eq!(stdout(&o), "branch,re,im,finite,residual\n,0.0000000000000000e0,0.0000000000000000e0,true,0.0000000000000000e0\n");

    let o = run(&["period", "--kind", "additive-c", "--param", "c=1", "--param", "x=1", "--param", "y=1"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().nth(1).unwrap().starts_with("-,"));

    let o = run(&["period", "--kind", "additive-s", "--param", "c=0", "--param", "x=1", "--param", "y=2"]);
    assert!(stdout(&o).contains("any,"));

    let o = run(&["period", "--kind", "exponential-c-gf", "--param", "a=2"]);
    assert!(stdout(&o).contains(",-inf,") && stdout(&o).contains("false"));
}

#[test]
fn representer_tables() {
    let o = run(&["representer", "--family", "additive", "--param", "c=1", "--kind", "cosine-plus", "--points", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let re = column(&stdout(&o), "closed_re");
    assert_eq!(re, vec![3f64.sqrt()]);

    let o = run(&["representer", "--f", "sin(x)", "--points", "0.7"]);
    let re = column(&stdout(&o), "re");
    assert!((re[0] - 0.7f64.cos()).abs() <= 1e-15);

    let o = run(&["representer", "--family", "additive", "--param", "c=2", "--kind", "cosine-plus", "--period", "--points", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(column(&stdout(&o), "t"), vec![-0.5, -0.5]);
}

#[test]
fn bridge_and_errata() {
    let o = run(&["bridge", "--f", "2^x", "--period", "-1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).lines().nth(1).unwrap().ends_with(",true"));

    let o = run(&["bridge", "--f", "2^x", "--period", "-1", "--grid", "-1:2:5"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["errata"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next().unwrap(), "topic,at,printed,computed,contradicted");
    assert_eq!(out.lines().count(), 11);
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("errata"));
}
