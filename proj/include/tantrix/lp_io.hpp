#pragma once

#include <string>
#include <string_view>

#include "tantrix/model.hpp"

namespace tantrix {

enum class ExportFormat { kLp, kMps };

// CPLEX-style LP text. Every column appears in the Bounds section in column
// order, which is what lets parse_lp restore column ids exactly.
std::string export_lp(const IntegerProgram& program);
// Free-format MPS; all columns sit inside one INTORG marker block.
std::string export_mps(const IntegerProgram& program);
std::string export_program(const IntegerProgram& program, ExportFormat format);

// Both parsers accept what the exporters write and throw ParseError
// otherwise. Column names must follow VarRef::name().
IntegerProgram parse_lp(std::string_view text);
IntegerProgram parse_mps(std::string_view text);
IntegerProgram parse_program(std::string_view text, ExportFormat format);

}  // namespace tantrix
