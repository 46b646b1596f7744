//! The rotation and zig-zag primitives and the edge counts of the three
//! attachment gadgets.

use diamforge::assembly::{attach_4k3, attach_4k4, attach_4k6, rotation, zigzag};

fn main() -> Result<(), diamforge::Error> {
    let rot = rotation(13, &[0, 6, 12, 5, 11, 4, 10, 3, 9, 2, 8])?;
    println!("rotation: {} triangles, {} new edges", rot.triangles.len(), rot.new_edges().len());
    let zz = zigzag(14, 15, &[0, 5, 10, 2, 7, 12, 4, 9, 1])?;
    println!("zig-zag:  {} triangles, {} new edges", zz.triangles.len(), zz.new_edges().len());
    println!("{:>3} {:>8} {:>8} {:>8} {:>8}", "k", "4k+4", "4k+3", "4k+6 A", "4k+6 B");
    for k in 7..=12 {
        let (a, b) = attach_4k6(k)?;
        println!(
            "{k:>3} {:>8} {:>8} {:>8} {:>8}",
            attach_4k4(k)?.new_edges().len(),
            attach_4k3(k)?.new_edges().len(),
            a.new_edges().len(),
            b.new_edges().len()
        );
    }
    Ok(())
}
