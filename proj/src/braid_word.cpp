#include "braidsig/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace braidsig {

BraidWord::BraidWord(int strands) : strands_(strands) {
    if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
    check_letters();
}

void BraidWord::check_letters() const {
    for (const Letter& l : letters_) {
        if (l.index < 1 || l.index > strands_ - 1)
            throw std::invalid_argument("generator index " + std::to_string(l.index) +
                                        " out of range for " + std::to_string(strands_) +
                                        " strands");
        if (l.sign != 1 && l.sign != -1)
            throw std::invalid_argument("letter sign must be +1 or -1");
    }
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
    std::vector<Letter> letters;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int sign = 1;
        std::string digits;
        if (tok[0] == 'a' || tok[0] == 'A') {
            sign = (tok[0] == 'a') ? 1 : -1;
            digits = tok.substr(1);
            if (digits.empty())
                throw std::invalid_argument("malformed token '" + tok + "'");
        } else {
            digits = tok;
            if (digits[0] == '-') {
                sign = -1;
                digits = digits.substr(1);
            } else if (digits[0] == '+') {
                digits = digits.substr(1);
            }
            if (digits.empty())
                throw std::invalid_argument("malformed token '" + tok + "'");
        }
        if (!std::all_of(digits.begin(), digits.end(),
                         [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("malformed token '" + tok + "'");
        int index = std::stoi(digits);
        if (index < 1 || index > strands - 1)
            throw std::invalid_argument("generator index " + std::to_string(index) +
                                        " out of range for " + std::to_string(strands) +
                                        " strands");
        letters.push_back(Letter{index, sign});
    }
    return BraidWord(strands, std::move(letters));
}

bool BraidWord::is_positive() const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const Letter& l) { return l.sign == 1; });
}

std::string BraidWord::format() const {
    std::string out;
    for (const Letter& l : letters_) {
        if (!out.empty()) out += ' ';
        out += (l.sign == 1) ? 'a' : 'A';
        out += std::to_string(l.index);
    }
    return out;
}

BraidWord BraidWord::concat(const BraidWord& other) const {
    if (strands_ != other.strands_)
        throw std::invalid_argument("strand mismatch in concat");
    std::vector<Letter> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::power(int n) const {
    if (n < 0) throw std::invalid_argument("power exponent must be >= 0");
    std::vector<Letter> out;
    out.reserve(letters_.size() * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.insert(out.end(), letters_.begin(), letters_.end());
    return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::cyclic_shift(int k) const {
    if (k < 0 || k > length())
        throw std::invalid_argument("cyclic shift amount out of range");
    std::vector<Letter> out(letters_.begin() + k, letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + k);
    return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::rotate180() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (Letter& l : out) l.index = strands_ - l.index;
    return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (Letter& l : out) l.sign = -l.sign;
    return BraidWord(strands_, std::move(out));
}

}  // namespace braidsig
