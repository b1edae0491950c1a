#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pls/square.hpp"

namespace pls {

// Grid format: one row per line, whitespace separated tokens, "." for an empty
// cell. Blank lines and lines starting with '#' are skipped. A line
// "alphabet: a1 a2 ... an" sets a non-standard symbol set.
//
// JSON format: {"n": 5, "cells": [[r, c, s], ...]} with an optional
// "alphabet" array.
//
// Both parsers throw ParseError with a 1-based line and column for malformed
// text and the usual validation errors for well-formed but non-Latin input.
PartialLatinSquare parse_grid(std::string_view text);
PartialLatinSquare parse_json(std::string_view text);
// Dispatches on the first non-blank character ('{' means JSON).
PartialLatinSquare parse_square(std::string_view text);
PartialLatinSquare read_square(const std::filesystem::path& path);

std::string to_grid(const PartialLatinSquare& p);
std::string to_json(const PartialLatinSquare& p);

}  // namespace pls
