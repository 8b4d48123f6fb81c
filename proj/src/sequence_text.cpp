#include <cctype>
#include <charconv>

#include "knotlike/io.hpp"

namespace knotlike {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    int integer() {
        skip_space();
        const std::size_t start = pos_;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        if (first != last && *first == '+') ++first;
        int value = 0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc()) fail("expected an integer", start);
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        if (value == 0) fail("zero entry", start);
        return value;
    }

    std::vector<int> list() {
        std::vector<int> out{integer()};
        while (accept(',')) out.push_back(integer());
        return out;
    }

    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        throw Error(ErrorKind::Parse, what + " at column " + std::to_string(at + 1) + " in '" + text_ + "'");
    }
    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

    std::size_t position() const { return pos_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

SignSequence body_of(Scanner& s, const std::vector<int>& entries, std::size_t start) {
    if (entries.size() % 2 != 0) {
        s.fail("odd number of entries (" + std::to_string(entries.size()) + ")", start);
    }
    return SignSequence(entries);
}

}  // namespace

ParsedSequence parse_sequence(const std::string& text) {
    Scanner s(text);
    if (s.at_end()) s.fail("empty sequence");
    s.skip_space();
    const std::size_t start = s.position();
    auto first = s.list();
    if (!s.accept('|')) {
        if (!s.at_end()) s.fail("unexpected character");
        return body_of(s, first, start);
    }
    if (first.size() != 1) s.fail("extended head must be a single entry", start);
    s.skip_space();
    const std::size_t body_start = s.position();
    auto body = s.list();
    if (!s.accept('|')) s.fail("expected '|' before the extended tail");
    const int tail = s.integer();
    if (!s.at_end()) s.fail("unexpected character");
    return ExtendedSignSequence(first[0], body_of(s, body, body_start), tail);
}

SignSequence parse_sign_sequence(const std::string& text) {
    auto parsed = parse_sequence(text);
    if (auto* seq = std::get_if<SignSequence>(&parsed)) return *seq;
    throw Error(ErrorKind::Parse, "expected a plain sequence, got an extended one: '" + text + "'");
}

}  // namespace knotlike
