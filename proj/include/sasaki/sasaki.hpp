#pragma once

#include "sasaki/arith.hpp"
#include "sasaki/certificate_json.hpp"
#include "sasaki/check.hpp"
#include "sasaki/classify.hpp"
#include "sasaki/families.hpp"
#include "sasaki/linalg.hpp"
#include "sasaki/orbifold.hpp"
#include "sasaki/seifert.hpp"
#include "sasaki/surface.hpp"
#include "sasaki/torsion.hpp"
