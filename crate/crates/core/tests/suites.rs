use g2crystal::verify::{self, ScaBounds};

#[test]
fn sca_suite_at_default_bounds() {
    let rep = verify::sca(&ScaBounds::default()).unwrap();
    assert!(rep.pass, "{:?}", rep.failures.first());
    assert!(rep.count > 1000);
}

#[test]
fn natural_step_on_one_solitons() {
    assert!(verify::natural_one_soliton(4).unwrap().pass);
}

#[test]
fn label_map_up_to_length_four() {
    let rep = verify::label_map(4);
    assert!(rep.pass);
    assert_eq!(rep.count, 2 * (4 + 7 + 10 + 13));
}

#[test]
fn reports_are_reproducible() {
    assert_eq!(verify::all(2).unwrap(), verify::all(2).unwrap());
}

#[test]
fn level_two_suites_pass() {
    for rep in verify::all(2).unwrap() {
        assert!(rep.pass, "{}: {:?}", rep.name, rep.failures.first());
    }
}
