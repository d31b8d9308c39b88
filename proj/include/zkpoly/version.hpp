#pragma once

#define ZKPOLY_VERSION "0.1.0"
