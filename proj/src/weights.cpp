#include "ratiolab/weights.hpp"

#include <cstddef>

namespace ratiolab {

namespace {

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("weight: cannot parse number '" + s + "'");
    }
    if (used != s.size())
        throw std::invalid_argument("weight: trailing characters in '" + s + "'");
    return v;
}

}  // namespace

WeightSpec parse_weight_spec(const std::string& text) {
    std::string head_part = text;
    std::string tail_part;
    bool has_tail = false;
    if (const auto semi = text.find(';'); semi != std::string::npos) {
        head_part = text.substr(0, semi);
        tail_part = text.substr(semi + 1);
        if (tail_part.rfind("tail=", 0) != 0)
            throw std::invalid_argument("weight: expected ';tail=<value>' suffix");
        tail_part = tail_part.substr(5);
        has_tail = true;
    }

    WeightSpec spec;
    std::size_t pos = 0;
    while (pos <= head_part.size()) {
        const auto comma = head_part.find(',', pos);
        const auto piece = head_part.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (piece.empty())
            throw std::invalid_argument("weight: empty entry in '" + text + "'");
        spec.head.push_back(parse_double(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (spec.head.empty())
        throw std::invalid_argument("weight: need at least one head value");

    spec.tail = has_tail ? parse_double(tail_part) : spec.head.back();
    spec.validate();
    return spec;
}

}  // namespace ratiolab
