// arglab :: umbrella header (everything except the CLI front end)

#pragma once

#include "arglab/aggregation.hpp"
#include "arglab/bench.hpp"
#include "arglab/catalog.hpp"
#include "arglab/errors.hpp"
#include "arglab/framework.hpp"
#include "arglab/io.hpp"
#include "arglab/order.hpp"
#include "arglab/postulates.hpp"
#include "arglab/semantics.hpp"
