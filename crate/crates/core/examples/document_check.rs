//! Parse a space document, print its canonical form and check every object in it.

use gts_lab::lab::{check_document, Document};

const DOC: &str = r#"
[[carrier]]
name = "X"
atoms = ["a", "b", "c"]

[[gts]]
name = "chain"
kind = "topological"
carrier = "X"
opens = ["{}", "{a}", "{a,b}", "{a,b,c}"]

[[gts]]
name = "broken"
kind = "explicit"
carrier = "X"
families = [["{a}", "{b}"]]
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let doc = Document::parse(DOC)?;
    println!("{}", doc.print()?);
    let report = check_document(&doc)?;
    for line in &report.summary {
        println!("object    {line}");
    }
    for r in &report.rejections {
        println!("rejected  {}: {}", r.object, r.violation);
    }
    println!("passed: {}", report.passed());
    Ok(())
}
