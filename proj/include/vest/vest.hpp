#pragma once

#include "vest/bits.hpp"
#include "vest/document.hpp"
#include "vest/error.hpp"
#include "vest/eval.hpp"
#include "vest/graph.hpp"
#include "vest/instance.hpp"
#include "vest/linalg.hpp"
#include "vest/reduction.hpp"
#include "vest/scalar.hpp"
#include "vest/verify.hpp"
