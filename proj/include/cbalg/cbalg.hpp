#pragma once

#include "cbalg/error.hpp"
#include "cbalg/field.hpp"
#include "cbalg/linalg.hpp"
#include "cbalg/algebra.hpp"
#include "cbalg/identities.hpp"
#include "cbalg/structure.hpp"
#include "cbalg/construct.hpp"
#include "cbalg/catalog.hpp"
#include "cbalg/actions.hpp"
