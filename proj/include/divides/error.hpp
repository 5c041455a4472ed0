#pragma once

#include <stdexcept>
#include <string>

namespace divides {

enum class ErrorKind {
	// malformed input
	Syntax,
	Slot,
	Stub,
	InvalidArgument,
	IndexOutOfRange,
	NonSquare,
	ZeroConstantTerm,
	// mathematical preconditions
	NonPlanar,
	Disconnected,
	NoPositiveRegion,
	NotUnimodular,
	NotCyclotomic,
	Singular,
	Parity,
	BudgetExceeded,
	// internal invariants; any occurrence is a defect
	ColoringConflict,
	Inconsistency,
	Involution,
	BlockMismatch,
	CertificateFailure,
};

enum class ErrorClass { Input, Precondition, Internal };

const char* to_string(ErrorKind kind);
ErrorClass classify(ErrorKind kind);

class Error : public std::runtime_error {
public:
	Error(ErrorKind kind, const std::string& message, int line = 0);

	ErrorKind kind() const noexcept { return kind_; }
	/// 1-based source line for parse errors, 0 when not applicable.
	int line() const noexcept { return line_; }

private:
	ErrorKind kind_;
	int line_;
};

} // namespace divides
