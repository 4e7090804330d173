#include "wall/text.hpp"

#include <fstream>
#include <sstream>

#include "wall/errors.hpp"

namespace wall {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path.string());
    return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

bool sanitize_utf8(std::string& text) {
    std::string out;
    bool valid = true;
    out.reserve(text.size());
    const auto* s = reinterpret_cast<const unsigned char*>(text.data());
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        const unsigned char c = s[i];
        std::size_t len = 0;
        std::uint32_t cp = 0;
        if (c < 0x80) {
            out += static_cast<char>(c);
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        }
        bool ok = len > 0 && i + len <= n;
        for (std::size_t k = 1; ok && k < len; ++k) {
            if ((s[i + k] & 0xC0) != 0x80) ok = false;
            else cp = (cp << 6) | (s[i + k] & 0x3F);
        }
        if (ok) {
            // Overlong forms, surrogates, and out-of-range code points.
            static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
            if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) ok = false;
        }
        if (ok) {
            out.append(text, i, len);
            i += len;
        } else {
            valid = false;
            out += "\xEF\xBF\xBD";
            ++i;
        }
    }
    if (!valid) text = std::move(out);
    return valid;
}

namespace {

bool glob_impl(std::string_view p, std::string_view s) {
    while (!p.empty()) {
        if (p.substr(0, 2) == "**") {
            std::string_view rest = p.substr(2);
            // "**/" may also match zero directories.
            if (!rest.empty() && rest.front() == '/') {
                if (glob_impl(rest.substr(1), s)) return true;
            }
            for (std::size_t i = 0; i <= s.size(); ++i) {
                if (glob_impl(rest, s.substr(i))) return true;
            }
            return false;
        }
        if (p.front() == '*') {
            std::string_view rest = p.substr(1);
            for (std::size_t i = 0; i <= s.size(); ++i) {
                if (glob_impl(rest, s.substr(i))) return true;
                if (i < s.size() && s[i] == '/') break;
            }
            return false;
        }
        if (s.empty()) return false;
        if (p.front() == '?') {
            if (s.front() == '/') return false;
        } else if (p.front() != s.front()) {
            return false;
        }
        p.remove_prefix(1);
        s.remove_prefix(1);
    }
    return s.empty();
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path) { return glob_impl(pattern, path); }

std::string with_thousands(std::int64_t value) {
    std::string digits = std::to_string(value < 0 ? -value : value);
    std::string out;
    const std::size_t n = digits.size();
    for (std::size_t i = 0; i < n; ++i) {
        out += digits[i];
        const std::size_t left = n - i - 1;
        if (left > 0 && left % 3 == 0) out += ',';
    }
    return value < 0 ? "-" + out : out;
}

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool ends_with_newline(std::string_view s) { return !s.empty() && s.back() == '\n'; }

std::string_view detect_terminator(std::string_view text) {
    const auto nl = text.find('\n');
    if (nl != std::string_view::npos && nl > 0 && text[nl - 1] == '\r') return "\r\n";
    return "\n";
}

}  // namespace wall

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "wall/log.hpp"

namespace wall {

spdlog::logger& log() {
    static std::shared_ptr<spdlog::logger> logger = [] {
        auto existing = spdlog::get("wall");
        if (existing) return existing;
        auto l = spdlog::stderr_logger_mt("wall");
        l->set_pattern("[%l] %v");
        return l;
    }();
    return *logger;
}

}  // namespace wall
