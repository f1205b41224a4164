//! Output formatting: shortest round-trip floats for machine formats,
//! six significant digits for humans.

use hyperint_core::families::AntiderivativeValue;
use hyperint_core::asymptotics::RegimeKind;

/// Shortest representation that parses back to the same f64 (Rust's
/// `Display` contract for floats).
pub fn fmt_roundtrip(v: f64) -> String {
    format!("{v}")
}

/// Six significant digits, rendered without exponent clutter where the
/// round-tripped value allows it.
pub fn fmt_sig6(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let rounded: f64 = format!("{v:.5e}").parse().expect("formatted float reparses");
    format!("{rounded}")
}

pub fn regime_tag(kind: RegimeKind) -> &'static str {
    match kind {
        RegimeKind::Series => "series",
        RegimeKind::Asymptotic => "asymptotic",
    }
}

/// One evaluation row: mirrors the fields of [`AntiderivativeValue`].
#[derive(Clone, Copy, Debug)]
pub struct Record {
    pub x: f64,
    pub value: f64,
    pub regime: RegimeKind,
    pub terms: u32,
    pub tail: f64,
}

impl Record {
    pub fn from_value(x: f64, v: &AntiderivativeValue) -> Self {
        let (terms, tail) = match v.series_detail {
            Some(d) => (d.terms_used, d.tail_estimate),
            None => (0, 0.0),
        };
        Record {
            x,
            value: v.value,
            regime: v.regime.kind,
            terms,
            tail,
        }
    }

    pub fn text_line(&self) -> String {
        format!(
            "x={} value={} regime={} terms={} tail={}",
            fmt_roundtrip(self.x),
            fmt_sig6(self.value),
            regime_tag(self.regime),
            self.terms,
            fmt_sig6(self.tail),
        )
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            fmt_roundtrip(self.x),
            fmt_roundtrip(self.value),
            regime_tag(self.regime),
            self.terms,
            fmt_roundtrip(self.tail),
        )
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "x": self.x,
            "value": self.value,
            "regime": regime_tag(self.regime),
            "terms": self.terms,
            "tail": self.tail,
        })
    }
}

pub const CSV_HEADER: &str = "x,value,regime,terms,tail";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(fmt_sig6(0.9460830703671830), "0.946083");
        assert_eq!(fmt_sig6(-3.0591165396), "-3.05912");
        assert_eq!(fmt_sig6(0.0), "0");
        assert_eq!(fmt_sig6(1234567.0), "1234570");
    }

    #[test]
    fn roundtrip_is_lossless() {
        for v in [0.1, 0.946083070367183, 1e-300, -2.5e17] {
            let s = fmt_roundtrip(v);
            assert_eq!(s.parse::<f64>().unwrap(), v);
        }
    }
}
