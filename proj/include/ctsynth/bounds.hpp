#pragma once

namespace ctsynth::bounds
{

    // Frozen from a tools/calibrate run over 30600 instances (gate-generated
    // 1- and 2-qubit unitaries, budgets 0..200, plus random elementary words on
    // dims 2..4). Measured maxima: word length / k = 7.56, gates / k = 239.3,
    // base-case ops = 7, gates per elementary op = 47.

    /// Elementary word length <= word_per_k * k + word_offset.
    inline constexpr int word_per_k = 8;   // N
    inline constexpr int word_offset = 7;  // M

    /// Emitted gate count <= gates_per_k * k + gates_offset.
    inline constexpr int gates_per_k = 240;  // C
    inline constexpr int gates_offset = 329; // D, seven ops at 47 gates each when k = 0

} // namespace ctsynth::bounds
