//! Enumeration prefixes frozen as literals, line-by-line agreement with the
//! reference term files under tests/data, and budget-truncation behavior.

use std::io::Write as _;
use std::path::PathBuf;

use zumkeller::verify::{compare_bfile, sequence, SequenceId};
use zumkeller::{Budget, Error};

fn data(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(file)
}

#[test]
fn frozen_prefixes() {
    let budget = Budget::default();
    let cases: [(SequenceId, &[u64]); 4] = [
        (
            SequenceId::Zumkeller,
            &[6, 12, 20, 24, 28, 30, 40, 42, 48, 54, 56, 60],
        ),
        (
            SequenceId::HalfZumkeller,
            &[6, 12, 20, 24, 28, 30, 40, 42, 48, 54, 56, 60],
        ),
        (
            SequenceId::Practical,
            &[1, 2, 4, 6, 8, 12, 16, 18, 20, 24, 28, 30],
        ),
        (
            SequenceId::Layered(3),
            &[120, 180, 240, 360, 420, 480, 504, 540, 600, 660, 672, 720],
        ),
    ];
    for (id, expected) in cases {
        let got = sequence(id, expected.len(), &budget).unwrap();
        assert_eq!(got.terms, expected, "{id} prefix drifted");
        assert_eq!(got.truncated_at, None);
        assert!(got.terms.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn reference_files_agree() {
    let budget = Budget::default();
    let cases = [
        (SequenceId::Zumkeller, "zumkeller.bfile", 140),
        (SequenceId::Practical, "practical.bfile", 140),
        (SequenceId::HalfZumkeller, "half_zumkeller.bfile", 80),
        (SequenceId::Layered(3), "layered_3.bfile", 12),
    ];
    for (id, file, lines) in cases {
        let cmp = compare_bfile(id, &data(file), &budget).unwrap();
        assert!(
            cmp.divergence.is_none(),
            "{file} diverges: {:?}",
            cmp.divergence
        );
        assert_eq!(cmp.lines_compared, lines, "{file} length drifted");
    }
}

#[test]
fn deliberate_divergence_is_located() {
    let budget = Budget::default();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wrong.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# comment survives").unwrap();
    writeln!(f, "1 6").unwrap();
    writeln!(f, "2 12").unwrap();
    writeln!(f, "3 21").unwrap();
    drop(f);
    let cmp = compare_bfile(SequenceId::Zumkeller, &path, &budget).unwrap();
    let d = cmp.divergence.expect("divergence not reported");
    assert_eq!((d.index, d.file_value, d.computed), (3, 21, 20));
    assert_eq!(cmp.lines_compared, 2);
}

#[test]
fn malformed_lines_name_their_position() {
    let budget = Budget::default();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "1 6\n2 twelve\n").unwrap();
    let err = compare_bfile(SequenceId::Zumkeller, &path, &budget).unwrap_err();
    match err {
        Error::Parse { line, .. } => assert_eq!(line, 2),
        other => panic!("unexpected error {other}"),
    }
}

#[test]
fn tight_budgets_truncate_instead_of_lying() {
    let budget = Budget {
        tau_cap: 4,
        dp_sum_cap: 1 << 26,
    };
    let got = sequence(SequenceId::Zumkeller, 5, &budget).unwrap();
    assert_eq!(got.terms, [6]);
    assert_eq!(got.truncated_at, Some(12));

    // the comparison still checks whatever prefix the budget allows
    let cmp = compare_bfile(SequenceId::Zumkeller, &data("zumkeller.bfile"), &budget).unwrap();
    assert!(cmp.divergence.is_none());
    assert_eq!(cmp.lines_compared, 1);
}

#[test]
fn sequence_ids_parse_and_print() {
    let round: SequenceId = "layered-4".parse().unwrap();
    assert_eq!(round.to_string(), "layered-4");
    assert!("layered-1".parse::<SequenceId>().is_err());
    assert!("anything-else".parse::<SequenceId>().is_err());
}
