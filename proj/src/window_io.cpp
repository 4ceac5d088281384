// Copyright 2026 The recurrence-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <boost/beast/core/detail/base64.hpp>
#include <sstream>

#include "reclab/errors.hpp"
#include "reclab/window.hpp"

namespace reclab {

namespace {

void put_u64_le(std::string& out, u64 v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_leb(std::string& out, u64 v) {
    do {
        unsigned char byte = v & 0x7f;
        v >>= 7;
        if (v) byte |= 0x80;
        out.push_back(static_cast<char>(byte));
    } while (v);
}

struct Reader {
    const std::string& s;
    std::size_t pos = 0;

    unsigned char byte() {
        if (pos >= s.size()) throw DomainError("truncated window encoding");
        return static_cast<unsigned char>(s[pos++]);
    }
    u64 u64_le() {
        u64 v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<u64>(byte()) << (8 * i);
        return v;
    }
    u64 leb() {
        u64 v = 0;
        for (int shift = 0;; shift += 7) {
            if (shift > 63) throw DomainError("malformed LEB128 value");
            const unsigned char b = byte();
            v |= static_cast<u64>(b & 0x7f) << shift;
            if (!(b & 0x80)) return v;
        }
    }
};

}  // namespace

std::string to_rle_binary(const Window& w) {
    std::vector<u64> runs;
    bool present = false;
    u64 cur = 0;
    for (u64 n = w.lo();; ++n) {
        if (w.contains(n) != present) {
            runs.push_back(cur);
            present = !present;
            cur = 0;
        }
        ++cur;
        if (n == w.hi()) break;
    }
    runs.push_back(cur);
    std::string out = "RLW1";
    put_u64_le(out, w.lo());
    put_u64_le(out, w.hi());
    put_leb(out, runs.size());
    for (u64 r : runs) put_leb(out, r);
    return out;
}

Window from_rle_binary(const std::string& bytes) {
    if (bytes.compare(0, 4, "RLW1") != 0) throw DomainError("not an RLW1 window encoding");
    Reader rd{bytes, 4};
    const u64 lo = rd.u64_le(), hi = rd.u64_le();
    Window w(lo, hi);
    const u64 nruns = rd.leb();
    u64 n = lo, total = 0;
    for (u64 i = 0; i < nruns; ++i) {
        const u64 len = rd.leb();
        total += len;
        if (total > w.span_size()) throw DomainError("window runs overflow the range");
        if (i & 1)
            for (u64 j = 0; j < len; ++j) w.insert(n + j);
        n += len;
    }
    if (total != w.span_size()) throw DomainError("window runs do not cover the range");
    if (rd.pos != bytes.size()) throw DomainError("trailing bytes after window encoding");
    return w;
}

std::string to_text(const Window& w) {
    std::ostringstream os;
    os << "# window " << w.lo() << ' ' << w.hi() << '\n';
    w.for_each([&](u64 n) { os << n << '\n'; });
    return os.str();
}

Window from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw DomainError("empty window text");
    std::istringstream hs(line);
    std::string hash, tag;
    u64 lo = 0, hi = 0;
    if (!(hs >> hash >> tag >> lo >> hi) || hash != "#" || tag != "window")
        throw DomainError("missing '# window lo hi' header");
    Window w(lo, hi);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        w.insert(parse_count(line));
    }
    return w;
}

std::string base64_encode(const std::string& bytes) {
    namespace b64 = boost::beast::detail::base64;
    std::string out(b64::encoded_size(bytes.size()), '\0');
    out.resize(b64::encode(out.data(), bytes.data(), bytes.size()));
    return out;
}

std::string base64_decode(const std::string& text) {
    namespace b64 = boost::beast::detail::base64;
    std::string out(b64::decoded_size(text.size()), '\0');
    const auto [written, read] = b64::decode(out.data(), text.data(), text.size());
    std::size_t body = text.size();
    while (body > 0 && text[body - 1] == '=') --body;
    if (read < body || text.size() % 4 != 0) throw DomainError("invalid base64");
    out.resize(written);
    return out;
}

}  // namespace reclab
