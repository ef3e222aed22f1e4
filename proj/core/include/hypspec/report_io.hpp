#pragma once

#include <iosfwd>
#include <string>

#include "hypspec/harmonic.hpp"
#include "hypspec/spectrum.hpp"

namespace hypspec {

// Line-oriented structured format, one document per run.  Numbers are printed
// with 17 significant digits so parse(serialize(report)) reproduces every
// field exactly.  Schema version 1; field names are frozen.
void serialize(std::ostream& os, const SpectrumReport& report);
void serialize(std::ostream& os, const HarmonicReport& report);

SpectrumReport parse_spectrum_report(std::istream& is);
HarmonicReport parse_harmonic_report(std::istream& is);

bool operator==(const EssentialBracket& a, const EssentialBracket& b);
bool operator==(const SphereMode& a, const SphereMode& b);
bool operator==(const ModeBracket& a, const ModeBracket& b);
bool operator==(const ChannelSweep& a, const ChannelSweep& b);
bool operator==(const SpectrumReport& a, const SpectrumReport& b);
bool operator==(const IntegralVerdict& a, const IntegralVerdict& b);
bool operator==(const HarmonicReport& a, const HarmonicReport& b);

// Human-readable rendering (never parsed by tests).
void print_human(std::ostream& os, const SpectrumReport& report);
void print_human(std::ostream& os, const HarmonicReport& report);

// CSV of per-mode brackets: channel, lambda, L, lower, upper.
void write_bracket_csv(std::ostream& os, const SpectrumReport& report);

std::string to_string(ChannelTag tag);
std::string to_string(Verdict verdict);
std::string to_string(HarmonicClass cls);
std::string to_string(TailClass cls);
std::string to_string(ModeKind kind);

}  // namespace hypspec
