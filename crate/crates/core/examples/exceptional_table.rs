//! Orbit structures of the exceptional complexes against the reference table,
//! and the Catalan residue expansions.
//!
//!     cargo run --release --example exceptional_table

use clustersieve::cspcheck::{catalan_residues, orbit_table, reference_expansion, render_expansion, CellStatus};
use clustersieve::qpoly::CoxeterType;

fn main() -> clustersieve::Result<()> {
    for ty in CoxeterType::EXCEPTIONAL {
        println!("{ty}");
        for cell in orbit_table(ty, ty.rank())? {
            let note = match cell.status {
                CellStatus::Match => String::new(),
                CellStatus::PrintedInconsistent => format!(
                    "   (printed {}, inconsistent with f_k = {})",
                    cell.printed,
                    cell.face_number.unwrap_or(0)
                ),
                CellStatus::Mismatch => format!("   MISMATCH, printed {}", cell.printed),
            };
            println!("  k={} {}{note}", cell.k, cell.computed);
        }
        let expansion = render_expansion(&catalan_residues(ty, 1)?);
        let same = expansion == reference_expansion(ty)?;
        println!(
            "  Cat(q) = {expansion} {}",
            if same { "(matches)" } else { "(differs)" }
        );
    }
    Ok(())
}
