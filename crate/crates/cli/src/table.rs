//! Tab-separated approximation tables.
//!
//! Matrix routes print `X`, `𝒳_X`, the formula's result vector and the
//! result set. The oracle route prints `X` and the result set only.

use covrough::{
    approximate, formula_for, from_set, Bound, CharacteristicMatrices, ElementSet, OperatorScheme, Route,
};

#[derive(Clone, Copy)]
pub enum Layout {
    Oracle,
    Matrix(Route),
    /// Matrix route plus a DIFF column against the oracle.
    Both,
}

pub fn render(
    cm: &CharacteristicMatrices,
    xs: &[ElementSet],
    scheme: OperatorScheme,
    bound: Bound,
    layout: Layout,
) -> covrough::Result<String> {
    let result_col = format!("{}(X)", scheme.symbol(bound));
    let mut out = String::new();
    let matrix_route = match layout {
        Layout::Oracle => None,
        Layout::Matrix(r) => Some(r),
        Layout::Both => Some(Route::Matrix),
    };
    match matrix_route {
        None => out.push_str(&format!("X\t{result_col}\n")),
        Some(r) => {
            let formula = formula_for(scheme, bound, r)?.expect("matrix routes have a formula");
            out.push_str(&format!("X\t𝒳_X\t{}\t{result_col}", formula.expression()));
            if matches!(layout, Layout::Both) {
                out.push_str("\tDIFF");
            }
            out.push('\n');
        }
    }
    for x in xs {
        match matrix_route {
            None => {
                let r = approximate(cm, x, scheme, bound, Route::Oracle)?;
                out.push_str(&format!("{x}\t{}\n", r.set));
            }
            Some(route) => {
                let r = approximate(cm, x, scheme, bound, route)?;
                let v = r.vector.as_ref().expect("matrix routes yield a vector");
                out.push_str(&format!("{x}\t{}\t{v}\t{}", from_set(x), r.set));
                if matches!(layout, Layout::Both) {
                    let o = approximate(cm, x, scheme, bound, Route::Oracle)?;
                    if o.set == r.set {
                        out.push_str("\t=");
                    } else {
                        out.push_str(&format!("\t≠ oracle {}", o.set));
                    }
                }
                out.push('\n');
            }
        }
    }
    Ok(out)
}
