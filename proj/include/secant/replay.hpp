#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secant/linalg.hpp"

namespace secant {

struct ReplayOptions {
    int n = 2;  // family parameter for nn1
    std::uint64_t prime = PrimeField::kMersenne31;
    std::uint64_t seed = 42;
};

struct ReplayResult {
    std::string id;
    bool ok = true;
    std::vector<std::string> transcript;
    std::string failure;  // first mismatched quantity
};

const std::vector<std::string>& replay_ids();

// Throws std::invalid_argument for an unknown id.
ReplayResult replay(const std::string& id, const ReplayOptions& opt = {});

}  // namespace secant
