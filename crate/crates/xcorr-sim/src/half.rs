//! 16-bit half-precision float conversion.
//!
//! Spectrum intensities travel as IEEE 754 binary16 bit patterns (the same
//! representation the accelerator's on-chip RAM and packets use), so the
//! conversions here define the numeric contract for everything downstream:
//! encode rounds to nearest, ties to even; decode is exact.

const F16_SIGN_MASK: u16 = 0x8000;
const F16_EXP_MASK: u16 = 0x7C00;
const F16_MAN_MASK: u16 = 0x03FF;

/// Decode a binary16 bit pattern to f32. Exact for every input.
pub fn f16_to_f32(bits: u16) -> f32 {
    let sign = u32::from(bits & F16_SIGN_MASK) << 16;
    let exp = (bits & F16_EXP_MASK) >> 10;
    let man = u32::from(bits & F16_MAN_MASK);

    let magnitude = match (exp, man) {
        (0, 0) => 0,
        (0, _) => {
            // Subnormal: renormalize into the f32 exponent range.
            let shift = man.leading_zeros() - 21;
            let man = (man << (shift + 1)) & 0x003F_FFFF;
            ((127 - 15 - shift) << 23) | (man << 13)
        }
        (0x1F, 0) => 0x7F80_0000,
        (0x1F, _) => 0x7F80_0000 | (man << 13),
        _ => ((u32::from(exp) + 127 - 15) << 23) | (man << 13),
    };
    f32::from_bits(sign | magnitude)
}

/// Encode an f32 as a binary16 bit pattern, rounding to nearest with ties
/// to even. Values beyond the binary16 range become infinities.
pub fn f32_to_f16(value: f32) -> u16 {
    let bits = value.to_bits();
    let sign = ((bits >> 16) & 0x8000) as u16;
    let exp = ((bits >> 23) & 0xFF) as i32;
    let man = bits & 0x007F_FFFF;

    if exp == 0xFF {
        // Infinity or NaN; keep NaN-ness by forcing a mantissa bit.
        return if man == 0 { sign | F16_EXP_MASK } else { sign | F16_EXP_MASK | 0x0200 };
    }

    // Unbiased exponent of the f32 value.
    let unbiased = exp - 127;
    if unbiased > 15 {
        // Overflows binary16 (max finite 65504); values at or above 65520
        // round to infinity, below that back to 65504.
        if unbiased == 16 && man < 0x0070_0000 {
            // 65504 < |v| < 65520: closer to 65504 than to 2^16.
            return sign | 0x7BFF;
        }
        return sign | F16_EXP_MASK;
    }
    if unbiased >= -14 {
        // Normal range: keep 10 mantissa bits, round on the remaining 13.
        let man16 = man >> 13;
        let rest = man & 0x1FFF;
        let mut out = (((unbiased + 15) as u32) << 10) | man16;
        if rest > 0x1000 || (rest == 0x1000 && (man16 & 1) == 1) {
            out += 1; // carry may roll into the exponent, which is correct
        }
        return sign | out as u16;
    }
    if unbiased >= -25 {
        // Subnormal range: implicit leading 1 becomes explicit, shifted.
        let man = man | 0x0080_0000;
        let shift = (-14 - unbiased) as u32 + 13;
        let man16 = man >> shift;
        let rest = man & ((1 << shift) - 1);
        let half = 1u32 << (shift - 1);
        let mut out = man16;
        if rest > half || (rest == half && (man16 & 1) == 1) {
            out += 1;
        }
        return sign | out as u16;
    }
    // Too small to round up to the least subnormal.
    sign
}

/// True when `value` survives a half-precision round trip bit-exactly.
pub fn is_exact_f16(value: f32) -> bool {
    f16_to_f32(f32_to_f16(value)).to_bits() == value.to_bits()
}
