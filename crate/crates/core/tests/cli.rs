use racah_bi::cli::run;

fn cli(args: &[&str]) -> (i32, String) {
    let out = run(std::iter::once("racah-bi").chain(args.iter().copied()));
    (out.code, out.output)
}

#[test]
fn reduce_prints_the_completion() {
    let (code, out) = cli(&["reduce", "racah", "C*B*A"]);
    assert_eq!(code, 0);
    assert_eq!(out, "-2*β + 2*A*B - 2*A*D - 2*B*C + 2*B*D - 2*C*D + A*B*C");
}

#[test]
fn ascii_aliases_and_json() {
    let (code, out) = cli(&["--json", "reduce", "bi", "{X,Y} - Z - kappa"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[]");
    let (_, out) = cli(&["reduce", "racah", "gamma + alpha + beta"]);
    assert_eq!(out, "0");
}

#[test]
fn map_zeta_of_d() {
    let (code, out) = cli(&["map", "zeta", "D"]);
    assert_eq!(code, 0);
    let (_, expected) = cli(&["reduce", "bi", "1/32*([X,Y] + [Y,Z] + [Z,X] + L)"]);
    assert_eq!(out, expected);
    let (code, out) = cli(&["map", "sigma", "--alg", "bi", "X*Y"]);
    assert_eq!(code, 0);
    assert_eq!(out, "X*Y");
}

#[test]
fn filtration_commands() {
    assert_eq!(cli(&["filtration", "check", "4,4,6,8,9,9"]), (0, "filtration: yes".into()));
    assert_eq!(cli(&["filtration", "check", "0,0,1,0,0,0"]), (0, "filtration: no".into()));
    let (code, _) = cli(&["filtration", "check", "1,2,3"]);
    assert_eq!(code, 2);
    let (code, out) = cli(&["filtration", "lead", "4,4,6,8,9,9", "13", "ι"]);
    assert_eq!((code, out.as_str()), (0, "0"));
}

#[test]
fn casimir_express() {
    let (code, out) = cli(&["casimir", "express", "delta"]);
    assert_eq!(code, 0);
    assert_eq!(out, "-9/16 - 1/2*ι - 1/4*κ - 1/4*λ - 1/4*μ + 1/4*ι^2");
    let (code, _) = cli(&["casimir", "express", "A"]);
    assert_eq!(code, 1);
}

#[test]
fn confluence_and_exit_codes() {
    let (code, out) = cli(&["confluence", "racah"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("confluent: yes"));
    assert_eq!(cli(&["reduce", "nowhere", "A"]).0, 2);
    let (code, out) = cli(&["reduce", "bi", "(2X-3)(2X+1)/16"]);
    assert_eq!(code, 2);
    assert!(out.starts_with("1:13:"), "{out}");
    assert_eq!(cli(&["frobnicate"]).0, 2);
    assert_eq!(cli(&["--help"]).0, 0);
}

#[test]
fn definition_file_presentation() {
    let dir = std::env::temp_dir().join(format!("racah-bi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("weyl.rws");
    std::fs::write(&path, "alphabet: p q\nweights: 1 1\nq*p -> p*q - 1\n").unwrap();
    let (code, out) = cli(&["reduce", path.to_str().unwrap(), "q^2*p"]);
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!((code, out.as_str()), (0, "-2*q + p*q^2"), "{out}");
}

#[test]
fn verify_all_passes() {
    let (code, out) = cli(&["verify", "all"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with(" 0 failed"));
}
