//! The fixture corpus. Set `LROUGH_BLESS=1` to rewrite the operator fixtures.

mod common;

use common::data::*;
use lrough::axioms::io::OperatorFile;
use lrough::axioms::{counterexample, COUNTEREXAMPLES};
use lrough::io::{AnyLoaded, CoveringFile};
use lrough::Error;

#[test]
fn operator_fixtures_match_the_built_in_tables() {
    let bless = std::env::var_os("LROUGH_BLESS").is_some();
    for id in COUNTEREXAMPLES {
        let cx = counterexample(id).unwrap();
        let name = format!("{id}.json");
        if bless {
            let f = OperatorFile::from_table(&cx.table, Some(cx.beta));
            std::fs::write(fixture_path(&name), serde_json::to_string_pretty(&f).unwrap() + "\n").unwrap();
        }
        let (g, beta) = OperatorFile::parse(&fixture_text(&name)).unwrap().build().unwrap();
        assert!(g.same_as(&cx.table), "{name}");
        assert_eq!(beta, cx.beta);
    }
}

#[test]
fn covering_fixtures_load() {
    for name in ["e5-1.json", "e6-1.json", "e6-4.json", "table1.json"] {
        load(name).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    assert!(matches!(load("e6-1.json").unwrap(), AnyLoaded::Unit(_)));
    assert_eq!(unit("e5-1.json").covering.names(), ["C1", "C2", "C3", "C4"]);
}

#[test]
fn covering_file_round_trip() {
    let f = unit("e6-1.json");
    let desc = CoveringFile::parse(&fixture_text("e6-1.json")).unwrap().lattice;
    let text = serde_json::to_string(&CoveringFile::describe(desc, &f.covering, &f.targets, 9)).unwrap();
    let again = match CoveringFile::parse(&text).unwrap().load(None).unwrap() {
        AnyLoaded::Unit(l) => l,
        _ => unreachable!(),
    };
    assert_eq!(again.covering.members(), f.covering.members());
    assert_eq!(again.targets, f.targets);
}

#[test]
fn diagnostics_name_the_field() {
    let text = fixture_text("e5-1.json").replace("0.8, 0.6, 0.4", "1.8, 0.6, 0.4");
    let err = CoveringFile::parse(&text).unwrap().load(None).unwrap_err();
    assert_eq!(err, Error::Parse("covering.C2[2]: value 1.8 does not belong to the lattice".into()));

    let text = fixture_text("e5-1.json").replace("[0.4, 0.3, 0.6, 0.6, 0.7, 0.4]", "[0.4, 0.3]");
    let err = CoveringFile::parse(&text).unwrap().load(None).unwrap_err();
    assert_eq!(err, Error::Parse("covering.C4: expected 6 values, found 2".into()));

    let err = CoveringFile::parse("{\"lattice\": {\"kind\": \"godel\"},\n \"beta\": }").unwrap_err();
    assert!(matches!(err, Error::Parse(m) if m.contains("line 2")));

    let text = fixture_text("e5-1.json").replace("\"C2\"", "\"C1\"");
    assert!(matches!(CoveringFile::parse(&text).unwrap_err(), Error::Parse(m) if m.contains("duplicate name")));
}
