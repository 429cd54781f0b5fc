#pragma once

// Umbrella header: exact Alexander-quandle coloring invariants of links,
// elementary divisors over Lambda_p, and the derived genus/tunnel bounds.

#include "aqlink/zmod.hpp"
#include "aqlink/poly.hpp"
#include "aqlink/laurent.hpp"
#include "aqlink/intpoly.hpp"
#include "aqlink/polytext.hpp"
#include "aqlink/factor.hpp"
#include "aqlink/field.hpp"
#include "aqlink/quandle.hpp"
#include "aqlink/diagram.hpp"
#include "aqlink/seifert.hpp"
#include "aqlink/fixtures.hpp"
#include "aqlink/coloring.hpp"
#include "aqlink/smith.hpp"
#include "aqlink/alexmod.hpp"
#include "aqlink/invariants.hpp"
#include "aqlink/report.hpp"
