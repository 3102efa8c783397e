//! JSON forms of hypergraphs, colorings and gadget inputs survive a round
//! trip.

use hypercolor::gadgets::*;
use hypercolor::{Coloring, Hypergraph, SolveOutcome};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(value: &T) {
    let text = serde_json::to_string(value).unwrap();
    let back: T = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, value, "{text}");
}

#[test]
fn gadgets_round_trip() {
    let f = Injection::new(vec![2, 0, 4]).unwrap();
    let g = Injection::new(vec![1, 3]).unwrap();
    round_trip(&f);
    round_trip(&range_edge_gadget(&f));
    round_trip(&range_charfn_gadget(&f, 6));
    round_trip(&parity_gadget(&f, &ParityWindow::covering(&f, 5)).unwrap());
    round_trip(&triple_separation_gadget(&f, &g, triple_window(&f, &g)).unwrap());
    round_trip(&pair_separation_gadget(&f, &g, pair_window(&f, &g)).unwrap());
    let t = TreeSpec::comb([vec![1, 1]], vec![vec![0, 1]]);
    round_trip(&t);
    round_trip(&tree_gadget(&t, 4));
    round_trip(&matryoshka(5));
    round_trip(&k_extension(&tree_gadget(&t, 3), 4).unwrap());
}

#[test]
fn documented_shapes_parse() {
    let h: Hypergraph = serde_json::from_value(json!({
        "universe": "naturals",
        "repr": "charfn",
        "edges": [{ "charfn": { "table": [0, 1, 1], "bound": 3 } }, { "tail": 2 }]
    }))
    .unwrap();
    assert_eq!(h.edges().len(), 2);
    let codes = json!({ "universe": { "window": 4 }, "repr": "seq", "edges": [{ "finite": [0, 1] }] });
    assert!(serde_json::from_value::<Hypergraph>(codes).is_ok());
    let mixed = json!({ "universe": { "window": 4 }, "repr": "seq", "edges": [{ "tail": 1 }] });
    assert!(serde_json::from_value::<Hypergraph>(mixed).is_err());
    assert!(serde_json::from_value::<Hypergraph>(json!({ "universe": "naturals", "repr": "set", "edges": [] })).is_ok());

    let c: Coloring = serde_json::from_value(json!({ "k": 2, "prefix": [1], "period": [0, 1] })).unwrap();
    assert_eq!(c.color_at(4).unwrap(), 1);
    let bare: Coloring = serde_json::from_value(json!({ "k": 2, "prefix": [1, 0] })).unwrap();
    assert!(bare.is_finite());

    let outcome = SolveOutcome::Uncolorable { level: 3, explored: 7 };
    assert_eq!(serde_json::to_value(&outcome).unwrap(), json!({ "uncolorable": { "level": 3, "explored": 7 } }));
    round_trip(&outcome);
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(serde_json::from_value::<Injection>(json!([1, 1])).is_err());
    assert!(serde_json::from_value::<Coloring>(json!({ "k": 2, "prefix": [2] })).is_err());
    assert!(serde_json::from_value::<TreeSpec>(json!({ "nodes": [[0, 0]] })).is_err());
}
