#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace wall {

/// Reads a whole file as bytes. Throws IoError.
std::string read_file(const std::filesystem::path& path);

/// Writes bytes, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view content);

/// Replaces invalid UTF-8 sequences with U+FFFD. Returns true if the
/// input was already valid.
bool sanitize_utf8(std::string& text);

/// Shell-style glob over '/'-separated paths: `*` and `?` stay within one
/// segment, `**` spans any number of segments.
bool glob_match(std::string_view pattern, std::string_view path);

/// 7304 -> "7,304".
std::string with_thousands(std::int64_t value);

std::string_view trim(std::string_view s);

bool ends_with_newline(std::string_view s);

/// "\r\n" if the text's first line terminator is CRLF, else "\n".
std::string_view detect_terminator(std::string_view text);

}  // namespace wall
