#pragma once

#include <string>

#include "bhphase/export.hpp"

namespace bhcli {

/// SVG 1.1 drawing of a portrait document on an 800x800 canvas with the unit
/// disk centered. Byte-identical for identical documents.
std::string render_svg(const bh::PortraitDocument& doc);

}  // namespace bhcli
