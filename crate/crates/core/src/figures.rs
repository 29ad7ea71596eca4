//! Worked examples used as golden data by the tests, the conformance suites
//! and the guide.

use crate::abh::Abh;
use crate::abt::AbtTriangle;
use crate::ssb::{Ballot, SsbTriangle};
use crate::triangle::Triangle;
use crate::tsscpp::{BooleanTriangle, FundamentalDomain, MagogTriangle};

/// The 42 ABTs of size 3, each as six row-major bits.
pub const SIZE3_ABTS: [&str; 42] = [
    "000000", "000100", "000010", "000001", "010100", "000110", "000101", "010010", "001010",
    "000011", "001001", "010001", "110100", "110010", "001110", "110001", "000111", "010110",
    "010101", "001101", "010011", "001011", "101010", "101001", "110110", "110101", "011110",
    "101110", "010111", "001111", "011011", "101101", "101011", "011101", "110011", "011111",
    "111110", "110111", "101111", "111011", "111101", "111111",
];

/// Last two rows of the five Dyck-type ABTs of size 6.
pub const DYCK_6: [(&str, &str); 5] = [
    ("11100", "000111"),
    ("11010", "001011"),
    ("10110", "010011"),
    ("11001", "001101"),
    ("10101", "010101"),
];

/// Last two rows of the nine Motzkin-type ABTs of size 4.
pub const MOTZKIN_4: [(&str, &str); 9] = [
    ("101", "0101"),
    ("110", "0011"),
    ("001", "0001"),
    ("010", "0001"),
    ("100", "0001"),
    ("010", "0010"),
    ("100", "0010"),
    ("100", "0100"),
    ("000", "0000"),
];

fn bits(s: &str) -> Vec<u8> {
    s.bytes().map(|b| b - b'0').collect()
}

/// Parses a row-major bit string into a triangle of the given size.
pub fn triangle_from_bits(size: usize, s: &str) -> Triangle<u8> {
    Triangle::from_cells(size, bits(s)).expect("example data has the right length")
}

/// An ABT of the given size that is zero except for its last two rows.
pub fn two_row_abt(size: usize, upper: &str, lower: &str) -> AbtTriangle {
    let (u, l) = (bits(upper), bits(lower));
    let tri = Triangle::from_fn(size, |i, j| {
        if i == size {
            l[j - 1]
        } else if i + 1 == size {
            u[j - 1]
        } else {
            0
        }
    });
    AbtTriangle::new(tri).expect("example data is an ABT")
}

pub fn size3_abts() -> Vec<AbtTriangle> {
    SIZE3_ABTS
        .iter()
        .map(|s| AbtTriangle::new(triangle_from_bits(3, s)).expect("example data is an ABT"))
        .collect()
}

/// Magog triangle of order 5 with its fundamental domain and full TSSCPP.
pub fn order5_magog() -> MagogTriangle {
    MagogTriangle::from_rows(vec![
        vec![1],
        vec![1, 1],
        vec![1, 1, 1],
        vec![1, 2, 2, 3],
        vec![1, 2, 2, 4, 4],
    ])
    .expect("shape")
}

pub fn order5_domain() -> FundamentalDomain {
    FundamentalDomain::from_rows(vec![
        vec![3, 3, 1, 1, 0],
        vec![2, 1, 1, 0],
        vec![0, 0, 0],
        vec![0, 0],
        vec![0],
    ])
    .expect("shape")
}

pub fn order5_tsscpp() -> Vec<Vec<u32>> {
    vec![
        vec![10, 10, 10, 10, 10, 9, 9, 7, 7, 5],
        vec![10, 10, 10, 9, 9, 7, 7, 5, 5, 3],
        vec![10, 10, 10, 9, 9, 7, 6, 5, 5, 3],
        vec![10, 9, 9, 8, 7, 5, 5, 4, 3, 1],
        vec![10, 9, 9, 7, 7, 5, 5, 3, 3, 1],
        vec![9, 7, 7, 5, 5, 3, 3, 1, 1, 0],
        vec![9, 7, 6, 5, 5, 3, 2, 1, 1, 0],
        vec![7, 5, 5, 4, 3, 1, 1, 0, 0, 0],
        vec![7, 5, 5, 3, 3, 1, 1, 0, 0, 0],
        vec![5, 3, 3, 1, 1, 0, 0, 0, 0, 0],
    ]
}

/// Fundamental domain of order 6 with its path and triangle encodings.
pub fn order6_domain() -> FundamentalDomain {
    FundamentalDomain::from_rows(vec![
        vec![4, 4, 3, 1, 1, 0],
        vec![2, 1, 1, 1, 0],
        vec![1, 1, 0, 0],
        vec![0, 0, 0],
        vec![0, 0],
        vec![0],
    ])
    .expect("shape")
}

/// Steps of the paths from `(2i, i)`, `i = 1..=5`, for [`order6_domain`].
pub const ORDER6_NILP: [&str; 5] = ["W", "SW", "SWW", "WSWS", "SSWSW"];

/// Steps of the paths from `(6 - i, 1)`, `i = 1..=5`, for [`order6_abt`].
pub const ORDER6_NCLP: [&str; 5] = ["E", "NE", "NEE", "ENEN", "NNENE"];

pub fn order6_abt() -> AbtTriangle {
    AbtTriangle::from_rows(vec![
        vec![0],
        vec![0, 1],
        vec![0, 0, 1],
        vec![1, 0, 1, 0],
        vec![0, 1, 0, 1, 1],
    ])
    .expect("example data is an ABT")
}

pub fn order6_boolean() -> BooleanTriangle {
    BooleanTriangle::from_rows(
        6,
        vec![
            vec![0],
            vec![1, 0],
            vec![0, 0, 1],
            vec![0, 1, 1, 0],
            vec![1, 1, 1, 0, 1],
        ],
    )
    .expect("shape")
}

/// A strict-sense ballot for seven candidates.
pub fn ballot7() -> Ballot {
    Ballot::new(
        7,
        vec![
            1, 1, 1, 2, 1, 2, 2, 3, 1, 3, 1, 2, 3, 1, 2, 4, 4, 5, 2, 3, 4, 5, 3, 4, 6, 5, 6, 7,
        ],
    )
    .expect("votes in range")
}

/// Shifted tableau of [`ballot7`].
pub fn ballot7_syt_rows() -> Vec<Vec<u32>> {
    vec![
        vec![1, 2, 3, 5, 9, 11, 14],
        vec![4, 6, 7, 12, 15, 19],
        vec![8, 10, 13, 20, 23],
        vec![16, 17, 21, 24],
        vec![18, 22, 26],
        vec![25, 27],
        vec![28],
    ]
}

/// SSB triangle of [`ballot7`].
pub fn ballot7_triangle_rows() -> Vec<Vec<u32>> {
    vec![
        vec![28],
        vec![27, 25],
        vec![26, 22, 18],
        vec![24, 21, 17, 16],
        vec![23, 20, 13, 10, 8],
        vec![19, 15, 12, 7, 6, 4],
        vec![14, 11, 9, 5, 3, 2, 1],
    ]
}

/// ABH of size 5.
pub fn abh5() -> Abh {
    Abh::from_rows(vec![
        vec![
            vec![0],
            vec![1, 0],
            vec![1, 0, 1],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1, 0],
        ],
        vec![vec![0], vec![0, 1], vec![0, 0, 1], vec![1, 1, 1, 0]],
        vec![vec![0], vec![1, 1], vec![0, 1, 1]],
        vec![vec![1], vec![0, 1]],
        vec![vec![1]],
    ])
    .expect("shape")
}

/// An SSB triangle of order 5.
pub fn ssb_triangle5() -> SsbTriangle {
    SsbTriangle::from_rows(vec![
        vec![15],
        vec![14, 12],
        vec![13, 10, 8],
        vec![11, 7, 6, 3],
        vec![9, 5, 4, 2, 1],
    ])
    .expect("shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abt::{abt_to_nclp, is_dyck_type, is_motzkin_type};
    use crate::paths::steps_to_string;
    use crate::tsscpp::{abt_to_boolean, domain_to_nilp, magog_to_domain};

    #[test]
    fn figure_data_is_consistent() {
        assert_eq!(size3_abts().len(), 42);
        assert!(DYCK_6
            .iter()
            .all(|(u, l)| is_dyck_type(&two_row_abt(6, u, l), 3)));
        assert!(MOTZKIN_4
            .iter()
            .all(|(u, l)| is_motzkin_type(&two_row_abt(4, u, l))));
        assert_eq!(magog_to_domain(&order5_magog()).unwrap(), order5_domain());
        let nilp = domain_to_nilp(&order6_domain()).unwrap();
        let got: Vec<String> = nilp
            .paths()
            .iter()
            .map(|p| steps_to_string(&p.steps))
            .collect();
        assert_eq!(got, ORDER6_NILP);
        let nclp = abt_to_nclp(&order6_abt());
        let got: Vec<String> = nclp
            .paths()
            .iter()
            .map(|p| steps_to_string(&p.steps))
            .collect();
        assert_eq!(got, ORDER6_NCLP);
        assert_eq!(abt_to_boolean(&order6_abt()), order6_boolean());
    }
}
