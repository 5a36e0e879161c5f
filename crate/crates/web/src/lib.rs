//! wasm-bindgen exports for the browser demo. Every function returns a JSON
//! string, or an error message the page shows verbatim.

use std::cell::OnceCell;

use qcasimir::cli::{cmd_gram, cmd_pair, parse_q, parse_weight, Format};
use qcasimir::pairing::Pairing;
use qcasimir::qfield::QMatrix;
use qcasimir::rep::{hamiltonian, hamiltonian_constants, rep16, specialize};
use serde_json::json;
use wasm_bindgen::prelude::*;

thread_local! {
    static PAIRING: Pairing = Pairing::new();
    static HAMILTONIAN: OnceCell<QMatrix> = const { OnceCell::new() };
}

fn with_hamiltonian<T>(f: impl FnOnce(&QMatrix) -> T) -> T {
    HAMILTONIAN.with(|cell| f(cell.get_or_init(hamiltonian)))
}

/// The 16×16 Hamiltonian at a rational `q`, e.g. `"1/2"`.
///
/// `{"q", "values": [[exact]], "symbolic": [[...]], "weights": [[a,b]], "scale", "shift"}`
#[wasm_bindgen]
pub fn hamiltonian_at(q: &str) -> Result<String, String> {
    let q0 = parse_q(q).map_err(|e| e.to_string())?;
    with_hamiltonian(|h| {
        let vals = specialize(h, &q0).map_err(|e| e.to_string())?;
        let values: Vec<Vec<String>> = vals.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        let symbolic: Vec<Vec<String>> = (0..h.rows()).map(|i| (0..h.cols()).map(|j| h[(i, j)].to_string()).collect()).collect();
        let weights: Vec<[i64; 2]> = rep16().weights.iter().map(|w| [w.x1, w.x2]).collect();
        let (scale, shift) = hamiltonian_constants();
        Ok(json!({
            "q": q0.to_string(),
            "values": values,
            "symbolic": symbolic,
            "weights": weights,
            "scale": scale.to_string(),
            "shift": shift.to_string(),
        })
        .to_string())
    })
}

/// `⟨y, x⟩` for an f-side `y` and e-side `x`, e.g. `pair("f2 f1", "e1 e2")`.
#[wasm_bindgen]
pub fn pair(y: &str, x: &str) -> Result<String, String> {
    PAIRING.with(|p| cmd_pair(p, y, x, None, Format::Json)).map_err(|e| e.to_string())
}

/// Gram block at a positive-cone weight such as `"2,2"`.
#[wasm_bindgen]
pub fn gram(nu: &str) -> Result<String, String> {
    let nu = parse_weight(nu).map_err(|e| e.to_string())?;
    PAIRING.with(|p| cmd_gram(p, nu, Format::Json)).map_err(|e| e.to_string())
}
