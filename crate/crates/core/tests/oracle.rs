use std::collections::BTreeSet;

use grothmon::oracle::{
    all_ses, all_subreps, is_quasi_split_window, is_torsionfree_window, ModuleWindow, Rep,
};
use grothmon::quiver::{Interval, LinearAQuiver, ModuleObj, TorsionfreeClass};

fn iv(lo: usize, hi: usize) -> Interval {
    Interval { lo, hi }
}

#[test]
fn nonsplit_witness_serializes() {
    let v = is_quasi_split_window(2, 2).unwrap();
    let w = v.witness.unwrap();
    assert_eq!(w.middle, ModuleObj::from(iv(1, 2)));
    let json = serde_json::to_value(&w).unwrap();
    assert_eq!(json["middle"], serde_json::json!([[1, 2]]));
    assert_eq!(json["sub"]["dims"], serde_json::json!([1, 0]));
}

#[test]
fn extensions_of_simples() {
    // 0 → S1 → ? → S2 → 0 has the split and the uniserial middle
    let (s1, s2) = (
        Rep::interval(2, iv(1, 1)).unwrap(),
        Rep::interval(2, iv(2, 2)).unwrap(),
    );
    let middles: BTreeSet<ModuleObj> = all_ses(&s1, &s2)
        .unwrap()
        .into_iter()
        .map(|s| s.middle)
        .collect();
    assert_eq!(middles.len(), 2);
    assert_eq!(all_ses(&s2, &s1).unwrap().len(), 1);
}

#[test]
fn subrepresentations_of_a_uniserial() {
    let x = Rep::interval(3, iv(1, 3)).unwrap();
    assert_eq!(all_subreps(&x).unwrap().len(), 4);
}

#[test]
fn window_rejects_non_closed_sets() {
    let q = LinearAQuiver::new(3).unwrap();
    let w = ModuleWindow::new(3, 4).unwrap();
    let ok: BTreeSet<Interval> = [iv(1, 1), iv(1, 2)].into();
    assert!(is_torsionfree_window(&w, &ok));
    // missing the submodule [1,1]
    assert!(!is_torsionfree_window(&w, &[iv(1, 2)].into()));
    // missing the extension [1,2] of S2 by S1
    assert!(!is_torsionfree_window(&w, &[iv(1, 1), iv(2, 2)].into()));
    let all = TorsionfreeClass::all(&q);
    assert!(is_torsionfree_window(&w, all.intervals()));
}
