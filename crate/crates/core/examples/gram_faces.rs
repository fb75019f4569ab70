//! Face dimensions of Gram spectrahedra of singular and non-singular forms.

use stablesq::gram::{gram_csv, gram_table, nonsingular_face_bound, singular_face_dim};
use stablesq::SearchConfig;

fn main() -> stablesq::Result<()> {
    println!("ternary sextics, corank 1: singular {}, non-singular at most {}", singular_face_dim(3, 3, 1)?, nonsingular_face_bound(3, 3, 1)?);
    let rows = gram_table(5..=10, 4..=4, 2..=2, &SearchConfig::default())?;
    print!("{}", gram_csv(&rows));
    Ok(())
}
