#pragma once

#include <string_view>

namespace tilecalc {

enum class Relation { less, equal, greater };

constexpr char relation_symbol(Relation r) {
    return r == Relation::less ? '<' : r == Relation::equal ? '=' : '>';
}

constexpr std::string_view to_string(Relation r) {
    return r == Relation::less ? "less" : r == Relation::equal ? "equal" : "greater";
}

}  // namespace tilecalc
