//! Named quivers from the worked examples.

use crate::quiver::Quiver;

/// `1 -> 2`
pub fn a2() -> Quiver {
    uniform_a(2)
}

/// Linearly oriented `1 -> 2 -> ... -> n`.
pub fn uniform_a(n: usize) -> Quiver {
    Quiver::new(n, (1..n).map(|i| (i, i + 1))).expect("path is a tree")
}

/// `D4` with central sink: `1 -> 2 <- 3`, `4 -> 2`. Admissible.
pub fn d4_left() -> Quiver {
    Quiver::new(4, [(1, 2), (3, 2), (4, 2)]).unwrap()
}

/// `D4` oriented `1 -> 2 -> 3`, `4 -> 2`. Not admissible.
pub fn d4_right() -> Quiver {
    Quiver::new(4, [(1, 2), (2, 3), (4, 2)]).unwrap()
}

/// `1 -> 2 <- 3`
pub fn a3_sink() -> Quiver {
    Quiver::new(3, [(1, 2), (3, 2)]).unwrap()
}

/// `1 <- 2 -> 3`
pub fn a3_source() -> Quiver {
    Quiver::new(3, [(2, 1), (2, 3)]).unwrap()
}

/// `1 -> 2 <- 3 <- 4 -> 5 -> 6`
pub fn six_vertex() -> Quiver {
    Quiver::new(6, [(1, 2), (3, 2), (4, 3), (4, 5), (5, 6)]).unwrap()
}

/// `1 -> 2 <- 3 <- 4 -> 5 <- 6`
pub fn zigzag6() -> Quiver {
    Quiver::new(6, [(1, 2), (3, 2), (4, 3), (4, 5), (6, 5)]).unwrap()
}

/// `1 -> 2 -> 3 <- 4 <- 5 -> 6 -> 7 -> 8 <- 9`
pub fn nine_vertex() -> Quiver {
    Quiver::new(
        9,
        [(1, 2), (2, 3), (4, 3), (5, 4), (5, 6), (6, 7), (7, 8), (9, 8)],
    )
    .unwrap()
}
