#pragma once

#include <span>
#include <string>
#include <vector>

#include "ceplane/ingest.hpp"
#include "ceplane/quantifiers.hpp"
#include "ceplane/surrogates.hpp"
#include "ceplane/windows.hpp"

namespace ceplane {

/// Complexity-entropy causality plane: per-window (H, C) points colored by
/// consecutive group, envelope bound curves, and mean +/- 1 std crosses for
/// each fBm baseline band. Self-contained SVG, inline styles only.
std::string render_plane_svg(std::span<const WindowResult> windows,
                             std::size_t group_size,
                             std::span<const BaselineBand> bands,
                             const ComplexityEnvelope& envelope);

/// Normalized entropy against window end date, with vertical markers for
/// events that fall inside the analyzed date range. Out-of-range or undated
/// events append a warning instead of failing.
std::string render_timeline_svg(std::span<const WindowResult> windows,
                                std::span<const EventAnnotation> events,
                                std::vector<std::string>* warnings = nullptr);

/// Deterministic categorical palette entry (golden-angle hue walk), as a
/// `#rrggbb` literal.
std::string group_color(std::size_t group_index);

}  // namespace ceplane
