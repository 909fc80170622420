#include "qwalk/lattice.hpp"

#include <stdexcept>

namespace qwalk {

CoinState parse_coin(std::string_view text) {
    if (text.size() != 2 || (text[0] != '0' && text[0] != '1') || (text[1] != '0' && text[1] != '1')) {
        throw std::invalid_argument("coin state must be one of 00, 01, 10, 11; got '" + std::string(text) + "'");
    }
    return CoinState(text[0] - '0', text[1] - '0');
}

bool validate_collision_table() {
    for (int k = 0; k < 16; ++k) {
        CoinState c1 = CoinState::from_index(k >> 2);
        CoinState c2 = CoinState::from_index(k & 3);
        if (hpp_coin_pair_map(c1, c2) != hpp_coin_pair_formula(c1, c2)) {
            return false;
        }
    }
    return true;
}

}  // namespace qwalk
