use std::process::Command;

use proptest::prelude::*;

use qsl2_cli::expr::{eval_element, parse};
use uqsl2::pbw::to_basis2;

fn qsl2(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qsl2"));
    cmd.args(args);
    for k in ["QSL2_JET_ORDER", "QSL2_WINDOW", "QSL2_NMAX"] {
        cmd.env_remove(k);
    }
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

const GOLDEN: [(&[&str], &str); 3] = [
    (
        &["nf", "--basis", "1", "X*Y"],
        include_str!("golden/nf_xy.json"),
    ),
    (&["hc", "Omega"], include_str!("golden/hc_omega.json")),
    (
        &["classify", "--eps", "1", "--lambda", "q^3"],
        include_str!("golden/classify_q3.json"),
    ),
];

#[test]
fn golden_outputs_are_byte_identical() {
    for (args, want) in GOLDEN {
        for _ in 0..2 {
            let (code, out, _) = qsl2(args, &[]);
            assert_eq!(code, 0, "{args:?}");
            assert_eq!(out, want, "{args:?}");
        }
    }
}

#[test]
fn exit_codes() {
    let (code, out, err) = qsl2(&["nf", "X/Z"], &[]);
    assert_eq!(code, 1);
    assert!(out.contains("\"error\":\"NonScalarDivisor\""));
    assert!(!err.is_empty());

    let (code, out, _) = qsl2(&["nf", "X +"], &[]);
    assert_eq!(code, 1);
    assert!(out.contains("\"error\":\"SyntaxError\"") && out.contains("\"position\":3"));

    let (code, _, _) = qsl2(&["classify", "--eps", "1"], &[]);
    assert_eq!(code, 1);

    let (code, out, _) = qsl2(&["adjoint", "--eps", "1", "--lambda", "1", "--q", "1"], &[]);
    assert_eq!(code, 2);
    assert!(out.contains("\"error\":\"InvalidQ\""));

    let (code, out, _) = qsl2(&["central", "X"], &[]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"central\":false,\"polynomial\":null}\n");

    let (code, out, _) = qsl2(
        &[
            "limit",
            "coeff",
            "--kind",
            "t0",
            "--n",
            "1",
            "--lam",
            "1",
            "--negative",
        ],
        &[],
    );
    assert_eq!(code, 2);
    assert!(out.contains("PoleAtOne"));

    let (code, out, _) = qsl2(&["--help"], &[]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn environment_overrides_and_flag_precedence() {
    let args = ["intertwine", "--eps", "1", "--from", "q^-1", "--to", "q"];
    let (_, out, _) = qsl2(&args, &[("QSL2_WINDOW", "12")]);
    assert!(out.contains("\"window\":12"), "{out}");
    let mut with_flag = args.to_vec();
    with_flag.extend(["--window", "16"]);
    let (_, out, _) = qsl2(&with_flag, &[("QSL2_WINDOW", "12")]);
    assert!(out.contains("\"window\":16"), "{out}");
    let (code, _, _) = qsl2(&args, &[("QSL2_WINDOW", "4")]);
    assert_eq!(code, 1);

    let coeff = ["limit", "coeff", "--kind", "t+", "--n", "0", "--lam", "0"];
    let (_, short, _) = qsl2(&coeff, &[("QSL2_JET_ORDER", "2")]);
    let (_, long, _) = qsl2(&coeff, &[]);
    assert_ne!(short, long);
    assert!(long.contains("\"ev1\":\"1\""));
}

#[test]
fn subcommand_examples() {
    let (_, out, _) = qsl2(&["spectrum", "--dim", "2"], &[]);
    assert!(out.contains("\"eigenvalues\":[\"-1\",\"1\"]") && out.contains("\"verified\":true"));

    let (_, out, _) = qsl2(&["weights", "--n", "0"], &[]);
    assert_eq!(out, "{\"weights\":[[0,\"1\"]]}\n");

    let (_, out, _) = qsl2(
        &[
            "act",
            "--eps",
            "1",
            "--lambda",
            "3",
            "--q",
            "4",
            "--vector",
            "0:1,2:1/2",
            "Omega",
        ],
        &[],
    );
    assert_eq!(out, "{\"vector\":[[0,\"10/3\"],[2,\"5/3\"]]}\n");

    let (_, out, _) = qsl2(
        &[
            "limit", "compare", "--eps", "1", "--lambda", "2", "--q", "2",
        ],
        &[],
    );
    assert!(out.contains("\"matches\":true"));

    let (code, out, _) = qsl2(&["--output", "text", "selftest"], &[]);
    assert_eq!(code, 0);
    assert!(out.starts_with("checks:") && out.contains("passed: true"));
}

const WORD_LETTERS: [&str; 9] = ["theta", "X", "Y", "Z", "x", "y", "z", "a", "b"];

fn random_expr() -> impl Strategy<Value = String> {
    let word = prop::collection::vec(0..WORD_LETTERS.len(), 0..4);
    let coeff = (-3i64..=3, -2i64..=2, 1i64..=3);
    prop::collection::vec((coeff, word), 1..4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|((a, k, d), w)| {
                let mut f = vec![format!("({a}*q^{k}/{d})")];
                f.extend(w.iter().map(|i| WORD_LETTERS[*i].to_string()));
                f.join("*")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn printed_elements_parse_back(src in random_expr()) {
        let e = eval_element(&parse(&src).unwrap()).unwrap();
        let back = eval_element(&parse(&e.to_string()).unwrap()).unwrap();
        prop_assert_eq!(&back, &e);
        let second = to_basis2(&e);
        let back2 = eval_element(&parse(&second.to_string()).unwrap()).unwrap();
        prop_assert_eq!(back2, e);
    }

    #[test]
    fn expression_trees_print_and_parse(src in random_expr()) {
        let tree = parse(&src).unwrap();
        prop_assert_eq!(parse(&tree.to_string()).unwrap(), tree);
    }
}
