#include <divides/error.hpp>

namespace divides {

const char* to_string(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::Syntax: return "SyntaxError";
	case ErrorKind::Slot: return "SlotError";
	case ErrorKind::Stub: return "StubError";
	case ErrorKind::InvalidArgument: return "InvalidArgument";
	case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
	case ErrorKind::NonSquare: return "NonSquare";
	case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
	case ErrorKind::NonPlanar: return "NonPlanar";
	case ErrorKind::Disconnected: return "Disconnected";
	case ErrorKind::NoPositiveRegion: return "NoPositiveRegion";
	case ErrorKind::NotUnimodular: return "NotUnimodular";
	case ErrorKind::NotCyclotomic: return "NotCyclotomic";
	case ErrorKind::Singular: return "Singular";
	case ErrorKind::Parity: return "ParityError";
	case ErrorKind::BudgetExceeded: return "BudgetExceeded";
	case ErrorKind::ColoringConflict: return "ColoringConflict";
	case ErrorKind::Inconsistency: return "InconsistencyError";
	case ErrorKind::Involution: return "InvolutionError";
	case ErrorKind::BlockMismatch: return "BlockMismatch";
	case ErrorKind::CertificateFailure: return "CertificateFailure";
	}
	return "UnknownError";
}

ErrorClass classify(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::Syntax:
	case ErrorKind::Slot:
	case ErrorKind::Stub:
	case ErrorKind::InvalidArgument:
	case ErrorKind::IndexOutOfRange:
	case ErrorKind::NonSquare:
	case ErrorKind::ZeroConstantTerm:
		return ErrorClass::Input;
	case ErrorKind::NonPlanar:
	case ErrorKind::Disconnected:
	case ErrorKind::NoPositiveRegion:
	case ErrorKind::NotUnimodular:
	case ErrorKind::NotCyclotomic:
	case ErrorKind::Singular:
	case ErrorKind::Parity:
	case ErrorKind::BudgetExceeded:
		return ErrorClass::Precondition;
	default:
		return ErrorClass::Internal;
	}
}

Error::Error(ErrorKind kind, const std::string& message, int line)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind), line_(line)
{
}

} // namespace divides
