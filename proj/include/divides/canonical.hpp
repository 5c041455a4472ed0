#pragma once

#include <divides/divide.hpp>

#include <cstdint>
#include <string>

namespace divides {

/// Equivalences beyond relabeling (crossing ids, slot rotation, branch order,
/// circle start) that canonical codes quotient out.
struct Symmetries {
	bool reversal = true;   // reverse the traversal of any branch
	bool reflection = true; // mirror the disk

	static Symmetries none() { return {false, false}; }
	/// Parses "rev,refl", "rev", "refl", "none" or "".
	static Symmetries parse(const std::string& text);
	std::string to_string() const;
};

/// Deterministic byte string; equal exactly for equivalent divides.
/// Requires a planar, connected divide.
std::string canonical_code(const DivideMap& d, Symmetries sym);

/// 64-bit FNV-1a of a byte string, as 16 lowercase hex digits.
std::string code_hash(const std::string& code);

} // namespace divides
