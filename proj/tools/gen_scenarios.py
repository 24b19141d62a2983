# Copyright 2026 The sdwanlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates scenarios/traditional.json and scenarios/sdwan.json."""

import copy
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent

LAT, JIT = 0.05, 0.17

def link(a, b, **kw):
    d = {"a": a, "b": b, "latency_ms": LAT, "jitter_ms": JIT}
    d.update(kw)
    return d

def iface(name, addr=None, vpn=None):
    d = {"name": name}
    if addr: d["address"] = addr
    if vpn is not None: d["vpn"] = vpn
    return d

areas = [
    {"name": "Headquarter", "as_number": 65001, "prefix": "10.1.0.0/16", "igp": "mixed", "kind": "enterprise"},
    {"name": "Data Centre", "as_number": 65002, "prefix": "10.2.0.0/16", "igp": "mixed", "kind": "enterprise"},
    {"name": "Branch 1", "as_number": 65006, "prefix": "10.6.0.0/16", "igp": "eigrp_like", "kind": "enterprise"},
    {"name": "Branch 2", "as_number": 65007, "prefix": "10.7.0.0/16", "igp": "eigrp_like", "kind": "enterprise"},
    {"name": "Branch 3", "as_number": 65004, "prefix": "10.4.0.0/16", "igp": "ospf_like", "kind": "enterprise"},
    {"name": "Branch 4", "as_number": 65005, "prefix": "10.5.0.0/16", "igp": "ospf_like", "kind": "enterprise"},
    {"name": "SP1", "as_number": 65010, "prefix": "10.100.0.0/16", "igp": "ospf_like", "kind": "provider"},
    {"name": "SP2", "as_number": 65020, "prefix": "10.200.0.0/16", "igp": "ospf_like", "kind": "provider"},
]

nodes, links = [], []

def core_area(tag, area, octet, asn, wan_r1, wan_r2):
    """Two border routers joined through two core switches; the access
    switch hangs off R1 and is dual-homed to S1."""
    p = f"10.{octet}"
    r1 = {"id": f"{tag}-R1", "role": "router", "area": area,
          "interfaces": [iface("eth0", f"{p}.0.1/24"), iface("eth1", f"{p}.1.1/24"),
                         iface("eth2", f"{p}.10.1/24")] + wan_r1,
          "igp": [{"protocol": "ospf_like", "area_id": 0, "interfaces": ["eth0", "eth2"]},
                  {"protocol": "eigrp_like", "interfaces": ["eth1", "eth2"]}],
          "bgp": {"local_as": asn, "originate": [f"{p}.0.0/16"]}}
    r2 = {"id": f"{tag}-R2", "role": "router", "area": area,
          "interfaces": [iface("eth0", f"{p}.0.2/24"), iface("eth1", f"{p}.1.2/24")] + wan_r2,
          "igp": [{"protocol": "ospf_like", "area_id": 0, "interfaces": ["eth0"]},
                  {"protocol": "eigrp_like", "interfaces": ["eth1"]}],
          "bgp": {"local_as": asn, "originate": [f"{p}.0.0/16"]}}
    nodes.extend([r1, r2])
    for s in ("S1", "S2", "S3"):
        nodes.append({"id": f"{tag}-{s}", "role": "switch", "area": area})
    links.extend([
        link(f"{tag}-R1:eth0", f"{tag}-S1:p1"),
        link(f"{tag}-R2:eth0", f"{tag}-S1:p2"),
        link(f"{tag}-R1:eth1", f"{tag}-S2:p1"),
        link(f"{tag}-R2:eth1", f"{tag}-S2:p2"),
        link(f"{tag}-R1:eth2", f"{tag}-S3:p1"),
        link(f"{tag}-S3:uplink", f"{tag}-S1:p3"),
    ])

core_area("HQ", "Headquarter", 1, 65001,
          [iface("eth3", "10.1.100.2/30")],
          [iface("eth2", "10.1.200.1/30"), iface("eth3", "10.1.101.2/30")])
core_area("DC", "Data Centre", 2, 65002,
          [iface("eth3", "10.1.200.2/30")],
          [iface("eth2", "10.2.100.2/30"), iface("eth3", "10.2.101.2/30")])

links.append(link("HQ-R2:eth2", "DC-R1:eth3"))  # dedicated line

nodes.append({"id": "HQ-H1", "role": "host", "area": "Headquarter",
              "interfaces": [iface("eth0", "10.1.10.10/24")], "gateway": "10.1.10.1"})
links.append(link("HQ-H1:eth0", "HQ-S3:p2"))

# Service provider 1: six routers in a ring.
for i in range(1, 7):
    nxt = i % 6 + 1
    prev = (i - 2) % 6 + 1
    ifs = [iface("eth0", f"10.100.{i}.1/30"), iface("eth1", f"10.100.{prev}.2/30")]
    nodes.append({"id": f"SP1-R{i}", "role": "router", "area": "SP1",
                  "interfaces": ifs,
                  "igp": [{"protocol": "ospf_like", "area_id": 0}],
                  "bgp": {"local_as": 65010, "originate": ["10.100.0.0/16"]}})
for i in range(1, 7):
    nxt = i % 6 + 1
    links.append(link(f"SP1-R{i}:eth0", f"SP1-R{nxt}:eth1"))

def attach_sp1(sp, cust_port, subnet):
    n = next(x for x in nodes if x["id"] == sp)
    n["interfaces"].append(iface("eth2", f"{subnet}.1/30"))
    n["bgp"]["originate"].append(f"{subnet}.0/30")
    links.append(link(f"{sp}:eth2", cust_port))

attach_sp1("SP1-R1", "HQ-R1:eth3", "10.1.100")
attach_sp1("SP1-R3", "DC-R2:eth2", "10.2.100")

sp2 = {"id": "SP2", "role": "router", "area": "SP2",
       "interfaces": [iface("eth0", "10.1.101.1/30"), iface("eth1", "10.2.101.1/30"),
                      iface("eth2", "10.4.0.1/30"), iface("eth3", "10.5.0.1/30")],
       "igp": [{"protocol": "ospf_like", "area_id": 0}],
       "bgp": {"local_as": 65020,
               "originate": ["10.200.0.0/16", "10.1.101.0/30", "10.2.101.0/30",
                             "10.4.0.0/30", "10.5.0.0/30"]}}
nodes.append(sp2)
links.extend([link("SP2:eth0", "HQ-R2:eth3"), link("SP2:eth1", "DC-R2:eth3")])

def branch(num, area, octet, asn, proto, sp_port):
    rid = f"R{octet}0" if octet in (4, 5) else f"R{octet}0"
    p = f"10.{octet}"
    igp = {"protocol": proto, "interfaces": ["eth1"]}
    if proto == "ospf_like": igp["area_id"] = 0
    nodes.append({"id": rid, "role": "router", "area": area,
                  "interfaces": [iface("eth0", f"{p}.0.2/30"), iface("eth1", f"{p}.1.1/24")],
                  "igp": [igp],
                  "bgp": {"local_as": asn, "originate": [f"{p}.0.0/16"]}})
    nodes.append({"id": f"B{num}-S1", "role": "switch", "area": area})
    nodes.append({"id": f"B{num}-H1", "role": "host", "area": area,
                  "interfaces": [iface("eth0", f"{p}.1.10/24")], "gateway": f"{p}.1.1"})
    links.extend([link(f"{rid}:eth1", f"B{num}-S1:p1"),
                  link(f"B{num}-H1:eth0", f"B{num}-S1:p2"),
                  link(f"{rid}:eth0", sp_port)])
    return rid

for sp, sub in (("SP1-R4", "10.6.0"), ("SP1-R5", "10.7.0")):
    n = next(x for x in nodes if x["id"] == sp)
    n["interfaces"].append(iface("eth2", f"{sub}.1/30"))
    n["bgp"]["originate"].append(f"{sub}.0/30")
branch(1, "Branch 1", 6, 65006, "eigrp_like", "SP1-R4:eth2")
branch(2, "Branch 2", 7, 65007, "eigrp_like", "SP1-R5:eth2")
branch(3, "Branch 3", 4, 65004, "ospf_like", "SP2:eth2")
branch(4, "Branch 4", 5, 65005, "ospf_like", "SP2:eth3")

HW = {
    "host": {"num_cpus": 1, "memory_total_mb": 1024, "cpu_base_pct": 2.0, "cpu_burst_pct": 3.0,
             "mem_base_pct": 20.0, "mem_per_object_pct": 0.1},
    "switch": {"num_cpus": 1, "memory_total_mb": 512, "cpu_base_pct": 1.0, "cpu_burst_pct": 2.0,
               "mem_base_pct": 15.0, "mem_per_object_pct": 0.1},
    "router": {"num_cpus": 1, "memory_total_mb": 1024, "cpu_base_pct": 4.0, "cpu_burst_pct": 6.0,
               "mem_base_pct": 30.0, "mem_per_object_pct": 0.2},
    "edge": {"num_cpus": 2, "memory_total_mb": 2048, "cpu_base_pct": 52.0, "cpu_burst_pct": 6.0,
             "cpu_event_weight": 0.02, "cpu_decay_ms": 60000, "mem_base_pct": 46.0, "mem_per_object_pct": 0.25},
    "manage": {"num_cpus": 4, "memory_total_mb": 16384, "cpu_base_pct": 7.0, "cpu_burst_pct": 1.5,
               "cpu_event_weight": 0.02, "cpu_decay_ms": 60000, "mem_base_pct": 54.83, "mem_per_object_pct": 0.1},
    "bond": {"num_cpus": 2, "memory_total_mb": 2048, "cpu_base_pct": 5.0, "cpu_burst_pct": 1.0,
             "cpu_event_weight": 0.02, "cpu_decay_ms": 60000, "mem_base_pct": 59.4, "mem_per_object_pct": 0.1},
    "smart": {"num_cpus": 2, "memory_total_mb": 2048, "cpu_base_pct": 0.4, "cpu_burst_pct": 0.5,
              "cpu_event_weight": 0.02, "cpu_decay_ms": 60000, "mem_base_pct": 18.75, "mem_per_object_pct": 0.1},
}

defaults = {
    "initial_ttl": 64, "seed": 20240611, "tunnel_delay_ms": 1.0,
    "processing_delay_ms": {"host": 0.1, "switch": 0.1, "router": 0.1, "edge": 0.1,
                            "manage": 1.7, "bond": 0.1, "smart": 0.1},
    "hardware": HW,
}

notes = [
    "Area prefixes, AS numbers and IGPs follow the enterprise segmentation table.",
    "Addressing: core segments 10.x.0.0/24 (S1) and 10.x.1.0/24 (S2), access LAN 10.x.10.0/24 with the gateway at .1 and hosts from .10.",
    "Inter-area links take a /30 from the customer area's prefix; the provider side is .1.",
    "The HQ-DC dedicated line uses 10.1.200.0/30.",
    "HQ and DC run ospf_like on the S1 segment and eigrp_like on the S2 segment; both carry the access LAN.",
    "Link latency 0.05 ms plus uniform jitter up to 0.17 ms; calibrated against the measured RTT ranges.",
]

trad = {
    "name": "traditional",
    "notes": notes,
    "defaults": defaults,
    "areas": areas,
    "nodes": nodes + [{"id": "DC-H1", "role": "host", "area": "Data Centre",
                       "interfaces": [iface("eth0", "10.2.10.10/24")], "gateway": "10.2.10.1"}],
    "links": links + [link("DC-H1:eth0", "DC-S3:p2")],
    "probes": [
        {"name": "hq-dc", "src_area": "Headquarter", "dst_area": "Data Centre", "src": "HQ-H1", "dst": "DC-H1"},
        {"name": "dc-branch3", "src_area": "Data Centre", "dst_area": "Branch 3", "src": "DC-H1", "dst": "R40"},
        {"name": "dc-branch4", "src_area": "Data Centre", "dst_area": "Branch 4", "src": "DC-H1", "dst": "R50"},
    ],
}

# SD-WAN variant.
sd_nodes = copy.deepcopy(nodes)
sd_links = copy.deepcopy(links)
for n in sd_nodes:
    if n["id"] in ("R40", "R50"):
        octet = n["id"][1]
        n["id"] = "E" + n["id"][1:]
        n["role"] = "edge"
        n["serial"] = f"VEDGE-{octet}0-0001"
        n["interfaces"] = [iface("eth0", f"10.{octet}.0.2/30", vpn=0)]
        del n["igp"]
        del n["bgp"]
for l in sd_links:
    for end in ("a", "b"):
        if l[end].startswith("R40:") or l[end].startswith("R50:"):
            l[end] = "E" + l[end][1:]

ctrl = [("vManage", "manage", "10.2.10.10", "p2", "VMANAGE-0001"),
        ("vBond", "bond", "10.2.10.11", "p3", "VBOND-0001"),
        ("vSmart", "smart", "10.2.10.12", "p4", "VSMART-0001")]
for cid, role, addr, port, serial in ctrl:
    sd_nodes.append({"id": cid, "role": role, "area": "Data Centre", "serial": serial,
                     "interfaces": [iface("eth0", addr + "/24")], "gateway": "10.2.10.1"})
    sd_links.append(link(f"{cid}:eth0", f"DC-S3:{port}"))

sd_notes = notes + [
    "vManage takes the DC host's address; vBond and vSmart share the DC access LAN.",
    "E40 and E50 replace R40 and R50 and boot with only the WAN interface (VPN 0) and a static route to the data centre.",
    "vManage processing delay 1.7 ms and tunnel encapsulation 1.0 ms are calibrated against the SD-WAN RTT range.",
]

sdwan = {
    "name": "sdwan",
    "notes": sd_notes,
    "defaults": defaults,
    "areas": areas,
    "nodes": sd_nodes,
    "links": sd_links,
    "static_routes": [
        {"node": "E40", "prefix": "10.2.0.0/16", "next_hop": "10.4.0.1"},
        {"node": "E50", "prefix": "10.2.0.0/16", "next_hop": "10.5.0.1"},
    ],
    "probes": [
        {"name": "hq-dc", "src_area": "Headquarter", "dst_area": "Data Centre", "src": "HQ-H1", "dst": "vManage"},
        {"name": "dc-branch3", "src_area": "Data Centre", "dst_area": "Branch 3", "src": "vManage", "dst": "E40"},
        {"name": "dc-branch4", "src_area": "Data Centre", "dst_area": "Branch 4", "src": "vManage", "dst": "E50"},
    ],
    "sdwan": {
        "controllers": {"manage": "vManage", "bond": "vBond", "smart": "vSmart"},
        "root_key": "sdwanlab-lab-root",
        "allowlist": ["VEDGE-40-0001", "VEDGE-50-0001"],
        "edge_to_edge_tunnels": False,
        "provisioning": [
            {"serial": "VEDGE-40-0001", "template": "../templates/branch3.json",
             "variables": {"system_ip": "10.4.255.1", "site_id": "40", "hostname": "E40",
                           "wan_ip": "10.4.0.2/30", "lan_ip": "10.4.1.1/24",
                           "sp_peer": "10.4.0.1"}},
            {"serial": "VEDGE-50-0001", "template": "../templates/branch4.json",
             "variables": {"system_ip": "10.5.255.1", "site_id": "50", "hostname": "E50",
                           "wan_ip": "10.5.0.2/30", "lan_ip": "10.5.1.1/24",
                           "sp_peer": "10.5.0.1"}},
        ],
    },
}

for obj, path in ((trad, "scenarios/traditional.json"), (sdwan, "scenarios/sdwan.json")):
    with open(ROOT / path, "w") as f:
        json.dump(obj, f, indent=2)
        f.write("\n")
