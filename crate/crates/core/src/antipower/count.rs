use num_bigint::BigUint;

use crate::{Error, Result};

/// Number of `(k, n)`-anti-power sequences over `alpha` letters:
/// `m! / (m - k)!` with `m = alpha^n` when `m >= k`, else 0.
pub fn count_anti_power_sequences(alpha: usize, k: usize, n: usize) -> Result<BigUint> {
    if alpha < 2 {
        return Err(Error::InvalidParameter(format!(
            "alphabet size must be at least 2, got {alpha}"
        )));
    }
    if k < 1 {
        return Err(Error::InvalidK { k, min: 1 });
    }
    if n < 1 {
        return Err(Error::InvalidParameter(
            "block length must be at least 1".into(),
        ));
    }
    let blocks = BigUint::from(alpha).pow(n as u32);
    let k_big = BigUint::from(k);
    if blocks < k_big {
        return Ok(BigUint::ZERO);
    }
    let mut product = BigUint::from(1u32);
    let mut factor = blocks;
    for _ in 0..k {
        product *= &factor;
        factor -= 1u32;
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            count_anti_power_sequences(2, 4, 2).unwrap(),
            BigUint::from(24u32)
        );
        assert_eq!(count_anti_power_sequences(2, 5, 2).unwrap(), BigUint::ZERO);
        assert_eq!(
            count_anti_power_sequences(3, 2, 1).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(
            count_anti_power_sequences(2, 1, 3).unwrap(),
            BigUint::from(8u32)
        );
    }

    #[test]
    fn large_block_counts_do_not_overflow() {
        // 10^6 * (10^6 - 1) * (10^6 - 2)
        let c = count_anti_power_sequences(10, 3, 6).unwrap();
        assert_eq!(c.to_string(), "999997000002000000");
        assert!(count_anti_power_sequences(2, 3, 64).unwrap() > BigUint::from(u128::MAX));
    }

    #[test]
    fn bounds() {
        assert!(count_anti_power_sequences(1, 2, 2).is_err());
        assert!(count_anti_power_sequences(2, 0, 2).is_err());
        assert!(count_anti_power_sequences(2, 2, 0).is_err());
    }
}
