#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace divides {

enum class BranchKind { Interval, Circle };

/// A strand passing through a crossing. The strand arrives along the germ
/// at `slot` and leaves along the opposite germ `(slot + 2) % 4`.
struct Visit {
	int crossing = 0; // 1-based
	int slot = 0;     // 0..3, counterclockwise around the crossing

	int exit_slot() const { return (slot + 2) % 4; }
	friend bool operator==(const Visit&, const Visit&) = default;
	friend auto operator<=>(const Visit&, const Visit&) = default;
};

struct Branch {
	BranchKind kind = BranchKind::Interval;
	std::vector<Visit> visits;

	friend bool operator==(const Branch&, const Branch&) = default;
};

/// Endpoint token `b<branch>.start` or `b<branch>.end` on the disk boundary.
struct Stub {
	int branch = 0; // 1-based
	bool start = true;

	friend bool operator==(const Stub&, const Stub&) = default;
	friend auto operator<=>(const Stub&, const Stub&) = default;
};

/// Rotation-system description of a divide: an immersed system of
/// intervals and circles in the unit disk.
///
/// Each crossing owns four germ slots 0..3 in counterclockwise order; slots
/// {0,2} carry one strand and {1,3} the other. `boundary` lists interval
/// endpoints counterclockwise along the disk boundary. A divide without
/// interval branches has no boundary stubs; its outer face is the face to
/// the right of the first edge of the first branch.
struct DivideMap {
	std::string name;
	int crossings = 0;
	std::vector<Branch> branches;
	std::vector<Stub> boundary;

	int interval_count() const;
	int circle_count() const;

	friend bool operator==(const DivideMap&, const DivideMap&) = default;
};

/// Checks the slot and stub invariants; throws Error(Slot|Stub|Syntax).
void validate_structure(const DivideMap& d);

/// Parses a DIV document and validates its structure.
DivideMap parse_divide(std::string_view text);

/// Writes `d` in DIV format. parse_divide(write_divide(d)) == d.
std::string write_divide(const DivideMap& d);

} // namespace divides
