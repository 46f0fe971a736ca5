#pragma once

#include <bellbound/errors.hpp>
#include <bellbound/inequality.hpp>
#include <bellbound/io.hpp>
#include <bellbound/noise.hpp>
#include <bellbound/optimizer.hpp>
#include <bellbound/polytopes.hpp>
#include <bellbound/quantum.hpp>
#include <bellbound/random.hpp>
#include <bellbound/reproduce.hpp>
#include <bellbound/tsirelson.hpp>
#include <bellbound/vectors.hpp>
#include <bellbound/webs.hpp>
