"""
Smoke script against a running API server

Walks through every endpoint with the worked 3x3 example and a few small
matrices, printing each response.
"""

import json
import os
from time import sleep

import requests

BASE_URL = os.environ.get('TROPICAL_API_URL', 'http://localhost:5000')

WORKED = {'rows': [['1', '4', '-1'], ['1', '0', '6'], ['-4', '1', '3']]}
INVERTIBLE = {'rows': [['0', '1'], ['2', '0']]}
SPARSE = {'rows': [['0', '-inf'], ['0', '-inf']]}


def print_response(response, title):
    """Pretty print API response"""
    print(f"\n{'='*70}")
    print(f"{title}")
    print(f"{'='*70}")
    print(f"Status: {response.status_code}")
    try:
        print(f"Response:\n{json.dumps(response.json(), indent=2)}")
    except ValueError:
        print(f"Response: {response.text}")
    print(f"{'='*70}\n")
    sleep(0.1)


def post(path, body):
    return requests.post(f"{BASE_URL}{path}", json=body, headers={"Content-Type": "application/json"})


def smoke():
    """Call every endpoint once"""
    print("\n" + "="*70)
    print("SUPERTROPICAL MATRIX API SMOKE RUN")
    print("="*70)

    print_response(requests.get(f"{BASE_URL}/"), "GET /")
    print_response(requests.get(f"{BASE_URL}/health"), "GET /health")

    # ==================== MATRICES ====================
    print_response(post('/matrices/det', {'matrix': WORKED}), "POST /matrices/det (expect 8g)")
    print_response(post('/matrices/det', {'matrix': WORKED, 'method': 'fast'}), "POST /matrices/det fast")
    print_response(post('/matrices/adjoint', {'matrix': INVERTIBLE}), "POST /matrices/adjoint")
    print_response(post('/matrices/pinv', {'matrix': INVERTIBLE}), "POST /matrices/pinv")
    print_response(post('/matrices/pinv', {'matrix': WORKED}), "POST /matrices/pinv (expect 422)")
    print_response(post('/matrices/rank', {'matrix': WORKED}), "POST /matrices/rank (expect 2)")
    print_response(post('/matrices/certificate', {'matrix': SPARSE}), "POST /matrices/certificate")
    print_response(post('/matrices/digraph', {'matrix': WORKED}), "POST /matrices/digraph")

    # ==================== VECTORS ====================
    print_response(post('/vectors/depend', {'vectors': [['0', '1'], ['1', '2']]}), "POST /vectors/depend")
    print_response(post('/vectors/depend', {'vectors': [['0', '1'], ['2', '0']]}), "POST /vectors/depend (independent)")
    print_response(post('/vectors/witness', {'vectors': WORKED['rows']}), "POST /vectors/witness (expect 7 7 10)")

    # ==================== SYSTEMS ====================
    system = {'rows': [['0', '1'], ['-1', '0']]}
    print_response(post('/systems/solve', {'matrix': system}), "POST /systems/solve")
    print_response(post('/systems/solve', {'matrix': system, 'point': ['0', '0']}), "POST /systems/solve with point")

    # ==================== ERRORS ====================
    print_response(post('/matrices/det', {}), "POST /matrices/det without matrix (expect 400)")
    print_response(requests.get(f"{BASE_URL}/nowhere"), "GET /nowhere (expect 404)")


if __name__ == "__main__":
    try:
        print(f"\n⚠️  Make sure the API is running on {BASE_URL}")
        print("Run: python app.py")
        smoke()
    except requests.exceptions.ConnectionError:
        print("\n❌ ERROR: Could not connect to the API")
        print("Make sure the Flask application is running:")
        print("  python app.py")
    except KeyboardInterrupt:
        print("\n\n⚠️  Smoke run interrupted by user")
