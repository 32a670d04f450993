package alpha ;

/** Generated class AlphaC7. */
public class AlphaC7 extends AlphaC5 implements AlphaSized {
    private int f0 = 0 ;
    public int shared = 1 ;
    private AlphaC6 helper = new AlphaC6 ( ) ;

    public AlphaC7 ( ) { }
    public AlphaC7 ( int a ) { f0 = a ; }
    public int getF0 ( ) { return f0 ; }
    public int peek ( int q ) { return q + 1 ; }
    public int size ( int k ) { return k * 2 ; }

    void work0 ( int p0 ) {
        int v = f0 ;
        // keep going
        if ( v > 0 && v > 1 || v == 7 ) {
        v = v + 1 ;
        }
        v = v > 2 ? v : 2 ;
        v = v + helper . shared ;
        f0 = v ;
    }

    /** Work item 1. */
    public void work1 ( ) {
        int v = 0 ;
        v = v + helper . peek ( v ) ;
        if ( v > 0 || v == 7 ) {
        v = v + 1 ;
        }
        v = v + helper . shared ;
    }

    /** Work item 2. */
    private void work2 ( int p0 , int p1 , int p2 ) {
        int v = f0 ;
        // keep going
        v = v + helper . peek ( v ) ;
        if ( v > 0 && v > 1 ) {
        v = v + 1 ;
        }
        while ( v < 100 ) {
        if ( v > 50 ) {
        break ;
        }
        v = v + 2 ;
        if ( v > 40 ) {
        continue ;
        }
        v = v + 1 ;
        }
        v = v + helper . shared ;
        f0 = v ;
    }
}
